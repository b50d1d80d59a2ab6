// Command-line front end: construct elements, run the per-module
// computations, and execute the verification suites.  All data I/O is JSON.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "zhat/adele.hpp"
#include "zhat/asymptotic.hpp"
#include "zhat/filters.hpp"
#include "zhat/json_io.hpp"
#include "zhat/localization.hpp"
#include "zhat/quotient.hpp"
#include "zhat/sheaf.hpp"
#include "zhat/spectrum.hpp"
#include "zhat/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::vector<long> primes{2, 3, 5, 7};
    int precision = zhat::RingContext::kDefaultPrecision;
    std::uint64_t seed = 0;
    bool json_output = false;
};

zhat::RingContext make_context(const Options& opt) {
    if (opt.precision < 4) throw zhat::ParseError("precision", "must be at least 4");
    return zhat::RingContext(opt.primes, opt.precision);
}

zhat::PrimeLevel parse_level(const std::string& s) {
    if (s == "minimal") return zhat::PrimeLevel::Minimal;
    if (s == "maximal") return zhat::PrimeLevel::Maximal;
    throw zhat::ParseError("level", "expected 'minimal' or 'maximal'");
}

void emit(const std::string& payload) { std::cout << payload << "\n"; }

// Applies config-file defaults before CLI11 sees the explicit flags.
void load_config_file(const std::string& path, Options& opt) {
    std::ifstream in(path);
    if (!in) throw zhat::ParseError("config", "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
        if (j.contains("primes")) opt.primes = j.at("primes").get<std::vector<long>>();
        if (j.contains("precision")) opt.precision = j.at("precision").get<int>();
        if (j.contains("seed")) opt.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("json")) opt.json_output = j.at("json").get<bool>();
    } catch (const std::exception& e) {
        throw zhat::ParseError("config", e.what());
    }
}

int run_verify(const Options& opt, const std::vector<std::string>& suites,
               const std::string& corrupt, bool list_only, bool sequential) {
    if (list_only) {
        for (const auto& name : zhat::suite_names()) emit(name);
        return 0;
    }
    zhat::VerifyConfig cfg{make_context(opt), opt.seed, corrupt};
    std::vector<zhat::SuiteResult> results = zhat::run_suites(cfg, suites, !sequential);
    bool all_passed = true;
    if (opt.json_output) {
        json out = json::array();
        for (const auto& r : results) {
            json j;
            j["suite"] = r.name;
            j["status"] = r.passed ? "pass" : "fail";
            j["checks"] = r.checks;
            if (!r.passed) j["detail"] = r.detail;
            out.push_back(j);
            all_passed = all_passed && r.passed;
        }
        emit(out.dump());
    } else {
        for (const auto& r : results) {
            std::cout << (r.passed ? "pass" : "FAIL") << "  " << r.name << " (" << r.checks
                      << " checks)";
            if (!r.passed) std::cout << "  -- " << r.detail;
            std::cout << "\n";
            all_passed = all_passed && r.passed;
        }
    }
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;

    // A config file supplies defaults; explicit flags override it.
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            try {
                load_config_file(argv[i + 1], opt);
            } catch (const zhat::Error& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
        }
    }

    CLI::App app{"exact arithmetic on finite truncations of the product of all Z_p,\n"
                 "its prime spectrum, sheaf sections, adeles, and value semigroups"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (same keys as the flags)");
    app.add_option("--primes", opt.primes, "context primes")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--precision", opt.precision, "p-adic digits per component (>= 4)")
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for sampled checks")->capture_default_str();
    app.add_flag("--json", opt.json_output, "machine-readable reports");

    // eval -----------------------------------------------------------------
    auto* eval = app.add_subcommand("eval", "ring arithmetic on product elements");
    std::string eval_op, eval_lhs, eval_rhs;
    eval->add_option("--op", eval_op, "add|sub|mul|neg|inv|valuation|unit")->required();
    eval->add_option("lhs", eval_lhs, "element as JSON")->required();
    eval->add_option("rhs", eval_rhs, "second element (binary ops)");

    // truthset ---------------------------------------------------------------
    auto* truthset = app.add_subcommand("truthset", "componentwise truth set of a predicate");
    std::string ts_element, ts_predicate = "maximal";
    truthset->add_option("element", ts_element, "element as JSON")->required();
    truthset->add_option("--predicate", ts_predicate, "zero|maximal|unit");

    // spec -------------------------------------------------------------------
    app.add_subcommand("spec", "enumerate the prime spectrum");

    // ideal ------------------------------------------------------------------
    auto* ideal_cmd = app.add_subcommand("ideal", "normal form, primality, membership");
    std::string ideal_generators, ideal_member;
    ideal_cmd->add_option("--generators", ideal_generators, "JSON array of elements")
        ->required();
    ideal_cmd->add_option("--member", ideal_member, "element to test for membership");

    // quotient -----------------------------------------------------------------
    auto* quotient_cmd = app.add_subcommand("quotient", "quotient by a prime ideal");
    long q_at = 0;
    std::string q_level = "maximal", q_map, q_prime;
    quotient_cmd->add_option("--at", q_at, "chain prime");
    quotient_cmd->add_option("--level", q_level, "minimal|maximal");
    quotient_cmd->add_option("--prime", q_prime, "prime-ideal descriptor JSON");
    quotient_cmd->add_option("--map", q_map, "element to project");

    // localize -----------------------------------------------------------------
    auto* localize_cmd = app.add_subcommand("localize", "localization at a prime ideal");
    long l_at = 0;
    std::string l_level = "maximal", l_num, l_den, l_prime;
    localize_cmd->add_option("--at", l_at, "chain prime");
    localize_cmd->add_option("--level", l_level, "minimal|maximal");
    localize_cmd->add_option("--prime", l_prime, "prime-ideal descriptor JSON");
    localize_cmd->add_option("--num", l_num, "fraction numerator");
    localize_cmd->add_option("--den", l_den, "fraction denominator");

    // sections / stalk ----------------------------------------------------------
    auto* sections_cmd = app.add_subcommand("sections", "ring of sections over an open set");
    std::string sections_open;
    sections_cmd->add_option("--open", sections_open, "open set as a JSON point list")
        ->required();

    auto* stalk_cmd = app.add_subcommand("stalk", "stalk at a point of the spectrum");
    long stalk_at = 0;
    std::string stalk_level = "maximal";
    stalk_cmd->add_option("--at", stalk_at, "chain prime")->required();
    stalk_cmd->add_option("--level", stalk_level, "minimal|maximal");

    // adele ---------------------------------------------------------------------
    auto* adele_cmd = app.add_subcommand("adele", "the finite-adele ring");
    adele_cmd->require_subcommand(1);
    adele_cmd->add_subcommand("spec", "primes of the adele ring");
    auto* adele_quot = adele_cmd->add_subcommand("quotient", "quotient by an adele prime");
    long aq_at = 0;
    std::string aq_map;
    adele_quot->add_option("--at", aq_at, "component prime")->required();
    adele_quot->add_option("--map", aq_map, "adele to project");
    auto* adele_loc = adele_cmd->add_subcommand("localize", "localization at an adele prime");
    long al_at = 0;
    std::string al_num, al_den;
    adele_loc->add_option("--at", al_at, "component prime")->required();
    adele_loc->add_option("--num", al_num, "fraction numerator (adele JSON)");
    adele_loc->add_option("--den", al_den, "fraction denominator (adele JSON)");
    auto* adele_frac = adele_cmd->add_subcommand("fraction", "divide an element by an integer");
    std::string af_element;
    long af_den = 1;
    adele_frac->add_option("--element", af_element, "product element as JSON")->required();
    adele_frac->add_option("--denominator", af_den, "positive integer denominator");

    // asymptotic -------------------------------------------------------------------
    auto* asym = app.add_subcommand("asymptotic", "the symbolic value-semigroup fragment");
    std::string as_op, as_lhs, as_rhs, as_delta;
    asym->add_option("--op", as_op, "compare|class|convex|member|galois")->required();
    asym->add_option("--lhs", as_lhs, "polynomial coefficient array, low degree first");
    asym->add_option("--rhs", as_rhs, "polynomial coefficient array, low degree first");
    asym->add_option("--delta", as_delta, "zero|standard|degree:<d>|all");

    // verify ---------------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "run the named verification suites");
    std::vector<std::string> verify_suites;
    std::string verify_corrupt;
    bool verify_list = false, verify_sequential = false;
    verify_cmd->add_option("--suite", verify_suites, "suite name (repeatable; default all)");
    verify_cmd->add_flag("--list", verify_list, "list suite names and exit");
    verify_cmd->add_option("--corrupt", verify_corrupt)->group(""); // test fixture
    verify_cmd->add_flag("--sequential", verify_sequential)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("verify"))
            return run_verify(opt, verify_suites, verify_corrupt, verify_list,
                              verify_sequential);

        zhat::RingContext ctx = make_context(opt);

        if (app.got_subcommand("eval")) {
            auto parse_elem = [&](const std::string& text) {
                return zhat::element_from_json(text, ctx);
            };
            if (eval_op == "add" || eval_op == "sub" || eval_op == "mul") {
                if (eval_rhs.empty())
                    throw zhat::ParseError("rhs", "binary op needs two elements");
                zhat::ProductElement lhs = parse_elem(eval_lhs);
                zhat::ProductElement rhs = parse_elem(eval_rhs);
                emit(zhat::to_json(eval_op == "add" ? lhs + rhs
                                                    : (eval_op == "sub" ? lhs - rhs
                                                                        : lhs * rhs)));
            } else if (eval_op == "neg") {
                emit(zhat::to_json(-parse_elem(eval_lhs)));
            } else if (eval_op == "inv") {
                emit(zhat::to_json(parse_elem(eval_lhs).inverse()));
            } else if (eval_op == "valuation") {
                zhat::ProductElement f = parse_elem(eval_lhs);
                json out = json::array();
                for (std::size_t i = 0; i < f.size(); ++i) {
                    json j;
                    j["prime"] = ctx.prime_at(i);
                    j["valuation"] = f.component_at(i).valuation().str();
                    out.push_back(j);
                }
                emit(out.dump());
            } else if (eval_op == "unit") {
                json j;
                j["unit"] = zhat::is_unit(parse_elem(eval_lhs));
                emit(j.dump());
            } else {
                throw zhat::ParseError("op", "unknown operation '" + eval_op + "'");
            }
            return 0;
        }

        if (app.got_subcommand("truthset")) {
            zhat::Predicate predicate;
            if (ts_predicate == "zero") predicate = zhat::Predicate::IsZero;
            else if (ts_predicate == "maximal") predicate = zhat::Predicate::InMaximal;
            else if (ts_predicate == "unit") predicate = zhat::Predicate::IsUnit;
            else throw zhat::ParseError("predicate", "expected zero|maximal|unit");
            emit(zhat::to_json(
                zhat::truth_set(zhat::element_from_json(ts_element, ctx), predicate)));
            return 0;
        }

        if (app.got_subcommand("spec")) {
            emit(zhat::spec_listing_json(zhat::spec_enumerate(ctx)));
            return 0;
        }

        if (app.got_subcommand("ideal")) {
            std::vector<zhat::ProductElement> gens =
                zhat::generators_from_json(ideal_generators, ctx);
            zhat::FinGenIdeal ideal = zhat::FinGenIdeal::generated_by(ctx, gens);
            json out = json::parse(zhat::to_json(ideal));
            out["proper"] = ideal.is_proper();
            auto prime = zhat::classify_prime(ideal);
            out["prime"] = prime ? json::parse(zhat::to_json(*prime)) : json(nullptr);
            if (ideal.is_proper())
                out["filter"] = json::parse(zhat::to_json(zhat::filter_of_ideal(ideal)));
            if (!ideal_member.empty()) {
                zhat::Decision d =
                    ideal.contains_checked(zhat::element_from_json(ideal_member, ctx));
                out["member"] = d.value;
                out["certain"] = d.certain;
            }
            emit(out.dump());
            return 0;
        }

        auto pick_prime = [&ctx](const std::string& descriptor, long at,
                                 const std::string& level) {
            if (!descriptor.empty()) return zhat::prime_from_json(descriptor, ctx);
            if (at == 0) throw zhat::ParseError("prime", "give --prime or --at/--level");
            return zhat::PrimeIdeal(ctx, at, parse_level(level));
        };

        if (app.got_subcommand("quotient")) {
            zhat::QuotientRing ring = zhat::quotient(pick_prime(q_prime, q_at, q_level));
            json out;
            out["kind"] = ring.kind_name();
            out["prime"] = ring.component_prime();
            if (!q_map.empty()) {
                zhat::ProductElement f = zhat::element_from_json(q_map, ctx);
                if (ring.is_residue_field())
                    out["image"] = ring.project_residue(f).value();
                else
                    out["image"] = ring.project_component(f).residue().get_str();
                out["in-kernel"] = ring.in_kernel(f);
            }
            emit(out.dump());
            return 0;
        }

        if (app.got_subcommand("localize")) {
            zhat::LocalizedRing ring = zhat::localize(pick_prime(l_prime, l_at, l_level));
            json out;
            out["kind"] = ring.kind_name();
            out["prime"] = ring.component_prime();
            out["kernel"] = json::parse(zhat::to_json(ring.kernel()));
            if (!l_num.empty()) {
                zhat::ProductElement num = zhat::element_from_json(l_num, ctx);
                zhat::PAdicRational image =
                    l_den.empty() ? ring.map_element(num)
                                  : ring.map_fraction(num, zhat::element_from_json(l_den, ctx));
                out["image"] = json::parse(zhat::to_json(image));
            }
            emit(out.dump());
            return 0;
        }

        if (app.got_subcommand("sections")) {
            zhat::OpenSet u = zhat::open_set_from_json(sections_open, ctx);
            json out;
            out["sections"] = json::parse(zhat::to_json(zhat::sections(u)));
            emit(out.dump());
            return 0;
        }

        if (app.got_subcommand("stalk")) {
            zhat::PrimeIdeal x(ctx, stalk_at, parse_level(stalk_level));
            json out;
            out["stalk"] = json::parse(zhat::to_json(zhat::stalk(x)));
            out["kind"] = zhat::section_kind_name(zhat::stalk(x).kind_at(stalk_at));
            emit(out.dump());
            return 0;
        }

        if (app.got_subcommand("adele")) {
            if (adele_cmd->got_subcommand("spec")) {
                json out = json::array();
                for (const auto& q : zhat::spec_adeles(ctx)) {
                    json j;
                    j["prime"] = q.prime();
                    j["minimal"] = true;
                    j["maximal"] = true;
                    out.push_back(j);
                }
                emit(out.dump());
            } else if (adele_cmd->got_subcommand("quotient")) {
                zhat::AdeleComponentField field =
                    zhat::adele_quotient(zhat::AdelePrime(ctx, aq_at));
                json out;
                out["kind"] = field.kind_name();
                out["prime"] = field.prime();
                if (!aq_map.empty()) {
                    zhat::AdeleElement f = zhat::adele_from_json(aq_map, ctx);
                    out["image"] = json::parse(zhat::to_json(field.project(f)));
                    out["in-kernel"] = field.in_kernel(f);
                }
                emit(out.dump());
            } else if (adele_cmd->got_subcommand("localize")) {
                zhat::AdeleComponentField field =
                    zhat::adele_localize(zhat::AdelePrime(ctx, al_at));
                json out;
                out["kind"] = field.kind_name();
                out["prime"] = field.prime();
                if (!al_num.empty()) {
                    zhat::AdeleElement num = zhat::adele_from_json(al_num, ctx);
                    zhat::PAdicRational image =
                        al_den.empty()
                            ? field.project(num)
                            : field.map_fraction(num, zhat::adele_from_json(al_den, ctx));
                    out["image"] = json::parse(zhat::to_json(image));
                }
                emit(out.dump());
            } else if (adele_cmd->got_subcommand("fraction")) {
                zhat::ProductElement f = zhat::element_from_json(af_element, ctx);
                if (af_den < 1) throw zhat::ParseError("denominator", "must be positive");
                emit(zhat::to_json(zhat::AdeleElement::from_fraction(f, af_den)));
            }
            return 0;
        }

        if (app.got_subcommand("asymptotic")) {
            auto parse_delta = [&]() -> zhat::ConvexSubsemigroup {
                if (as_delta == "zero") return zhat::ConvexSubsemigroup::zero();
                if (as_delta == "standard") return zhat::ConvexSubsemigroup::standard();
                if (as_delta == "all") return zhat::ConvexSubsemigroup::all();
                if (as_delta.rfind("degree:", 0) == 0)
                    return zhat::ConvexSubsemigroup::degree_at_most(
                        std::stoi(as_delta.substr(7)));
                throw zhat::ParseError("delta", "expected zero|standard|degree:<d>|all");
            };
            if (as_op == "compare") {
                zhat::AsymptoticNat x = zhat::asymptotic_from_json(as_lhs);
                zhat::AsymptoticNat y = zhat::asymptotic_from_json(as_rhs);
                auto ord = x <=> y;
                json out;
                out["compare"] = ord == std::strong_ordering::less
                                     ? "less"
                                     : (ord == std::strong_ordering::greater ? "greater"
                                                                             : "equal");
                emit(out.dump());
            } else if (as_op == "class") {
                zhat::AsymptoticNat x = zhat::asymptotic_from_json(as_lhs);
                json out;
                out["degree"] = zhat::archimedean_class(x);
                out["display"] = x.str();
                emit(out.dump());
            } else if (as_op == "convex") {
                zhat::AsymptoticNat x = zhat::asymptotic_from_json(as_lhs);
                emit(zhat::to_json(zhat::least_convex_containing(x)));
            } else if (as_op == "member") {
                zhat::ConvexSubsemigroup delta = parse_delta();
                zhat::AsymptoticNat x = zhat::asymptotic_from_json(as_lhs);
                json out;
                out["delta"] = delta.str();
                out["member"] = delta.contains(x);
                out["in-prime"] = zhat::prime_of(delta).contains_valuation(x);
                emit(out.dump());
            } else if (as_op == "galois") {
                zhat::ConvexSubsemigroup delta = parse_delta();
                zhat::SymbolicPrime p = zhat::prime_of(delta);
                zhat::ConvexSubsemigroup back = zhat::convex_of(p);
                json out;
                out["delta"] = delta.str();
                out["round-trip"] = back.str();
                out["identity"] = back == delta;
                emit(out.dump());
            } else {
                throw zhat::ParseError("op", "expected compare|class|convex|member|galois");
            }
            return 0;
        }
    } catch (const zhat::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
