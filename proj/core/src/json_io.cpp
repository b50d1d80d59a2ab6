#include "zhat/json_io.hpp"

#include <json.hpp>

namespace zhat {

using json = nlohmann::ordered_json;

namespace {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("<input>", e.what());
    }
}

template <typename T>
T typed(const json& j, const std::string& field) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ParseError(field, "unexpected value type");
    }
}

mpz_class integer_field(const json& j, const std::string& field) {
    std::string digits;
    if (j.is_string())
        digits = j.get<std::string>();
    else if (j.is_number_integer())
        digits = std::to_string(j.get<long long>());
    else
        throw ParseError(field, "expected a decimal string or integer");
    try {
        return mpz_class(digits);
    } catch (const std::invalid_argument&) {
        throw ParseError(field, "not a decimal integer: '" + digits + "'");
    }
}

json context_json(const RingContext& ctx) {
    json j;
    j["primes"] = ctx.primes();
    j["N"] = ctx.precision();
    return j;
}

RingContext context_from(const json& j, const std::string& field) {
    if (!j.is_object() || !j.contains("primes")) throw ParseError(field, "missing primes");
    std::vector<long> primes;
    for (const auto& p : j.at("primes")) {
        if (!p.is_number_integer()) throw ParseError(field + ".primes", "expected integers");
        primes.push_back(p.get<long>());
    }
    int precision = RingContext::kDefaultPrecision;
    if (j.contains("N")) precision = typed<int>(j.at("N"), field + ".N");
    try {
        return RingContext(std::move(primes), precision);
    } catch (const std::exception& e) {
        throw ParseError(field, e.what());
    }
}

json rational_json(const PAdicRational& a) {
    json j;
    if (a.is_zero()) {
        j["zero"] = true;
    } else {
        j["exp"] = a.exponent();
        j["unit"] = a.unit().get_str();
    }
    return j;
}

PAdicRational rational_from(const json& j, long prime, int precision,
                            const std::string& field) {
    if (j.is_object() && j.contains("zero") && typed<bool>(j.at("zero"), field + ".zero"))
        return PAdicRational::zero(prime, precision);
    if (!j.is_object() || !j.contains("exp") || !j.contains("unit"))
        throw ParseError(field, "expected {\"exp\": ..., \"unit\": ...} or {\"zero\": true}");
    long exp = typed<long>(j.at("exp"), field + ".exp");
    mpz_class unit = integer_field(j.at("unit"), field + ".unit");
    return PAdicRational::from_parts(exp, PAdicInt(prime, precision, unit));
}

ProductElement element_from(const json& j, const std::optional<RingContext>& fallback,
                            const std::string& field) {
    const json* comps = nullptr;
    std::optional<RingContext> ctx = fallback;
    if (j.is_array()) {
        comps = &j;
    } else if (j.is_object() && j.contains("components")) {
        comps = &j.at("components");
        if (j.contains("context")) ctx = context_from(j.at("context"), field + ".context");
    } else {
        throw ParseError(field, "expected a component array or {context, components}");
    }
    if (!ctx) throw ParseError(field + ".context", "no context given and none to fall back on");
    if (!comps->is_array() || comps->size() != ctx->size())
        throw ParseError(field + ".components",
                         "expected exactly " + std::to_string(ctx->size()) + " components");
    std::vector<mpz_class> residues;
    residues.reserve(comps->size());
    for (std::size_t i = 0; i < comps->size(); ++i)
        residues.push_back(integer_field((*comps)[i], field + ".components[" + std::to_string(i) + "]"));
    return ProductElement::from_residues(*ctx, residues);
}

PrimeIdeal prime_from(const json& j, const RingContext& ctx, const std::string& field) {
    if (!j.is_object() || !j.contains("prime") || !j.contains("level"))
        throw ParseError(field, "expected {\"prime\": p, \"level\": \"minimal|maximal\"}");
    long p = typed<long>(j.at("prime"), field + ".prime");
    std::string level = typed<std::string>(j.at("level"), field + ".level");
    if (level != "minimal" && level != "maximal")
        throw ParseError(field + ".level", "expected 'minimal' or 'maximal'");
    if (!ctx.has_prime(p)) throw ParseError(field + ".prime", "prime not in context");
    return PrimeIdeal(ctx, p,
                      level == "minimal" ? PrimeLevel::Minimal : PrimeLevel::Maximal);
}

} // namespace

std::string to_json(const RingContext& ctx) { return context_json(ctx).dump(); }

std::string to_json(const PAdicInt& a) {
    json j;
    j["p"] = a.prime();
    j["N"] = a.precision();
    j["residue"] = a.residue().get_str();
    return j.dump();
}

std::string to_json(const PAdicRational& a) {
    json j;
    j["p"] = a.prime();
    j["N"] = a.precision();
    json body = rational_json(a);
    j.update(body);
    return j.dump();
}

std::string to_json(const ProductElement& f) {
    json j;
    j["context"] = context_json(f.context());
    json comps = json::array();
    for (std::size_t i = 0; i < f.size(); ++i) comps.push_back(f.component_at(i).residue().get_str());
    j["components"] = comps;
    return j.dump();
}

std::string to_json(const TruthSet& t) {
    json j;
    switch (t.predicate) {
        case Predicate::IsZero: j["predicate"] = "zero"; break;
        case Predicate::InMaximal: j["predicate"] = "maximal"; break;
        case Predicate::IsUnit: j["predicate"] = "unit"; break;
    }
    j["members"] = t.members;
    j["certain"] = t.certain;
    return j.dump();
}

std::string to_json(const Filter& f) {
    json j;
    j["base"] = f.base();
    return j.dump();
}

std::string to_json(const Ultrafilter& u) {
    json j;
    j["point"] = u.point();
    return j.dump();
}

std::string to_json(const FinGenIdeal& ideal) {
    json j;
    j["context"] = context_json(ideal.context());
    json exps = json::array();
    for (const auto& e : ideal.exponents()) {
        if (e.is_finite())
            exps.push_back(e.value());
        else
            exps.push_back("inf");
    }
    j["exponents"] = exps;
    return j.dump();
}

std::string to_json(const PrimeIdeal& p) {
    json j;
    j["prime"] = p.chain_prime();
    j["level"] = level_name(p.level());
    return j.dump();
}

std::string spec_listing_json(const std::vector<PrimeIdeal>& points) {
    json out = json::array();
    for (const auto& p : points) {
        json j;
        j["prime"] = p.chain_prime();
        j["level"] = level_name(p.level());
        json gen = json::array();
        ProductElement g = p.generator();
        for (std::size_t i = 0; i < g.size(); ++i) gen.push_back(g.component_at(i).residue().get_str());
        j["generator"] = gen;
        out.push_back(j);
    }
    return out.dump();
}

std::string to_json(const OpenSet& u) {
    json out = json::array();
    for (const auto& x : u.points()) {
        json j;
        j["prime"] = x.chain_prime();
        j["level"] = level_name(x.level());
        out.push_back(j);
    }
    return out.dump();
}

std::string to_json(const SectionRing& ring) {
    json out = json::array();
    const RingContext& ctx = ring.context();
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        json j;
        j["prime"] = ctx.prime_at(i);
        j["kind"] = section_kind_name(ring.kinds()[i]);
        out.push_back(j);
    }
    return out.dump();
}

std::string to_json(const AdeleElement& a) {
    json j;
    j["context"] = context_json(a.context());
    json comps = json::array();
    for (std::size_t i = 0; i < a.context().size(); ++i)
        comps.push_back(rational_json(a.component_at(i)));
    j["components"] = comps;
    j["integral"] = a.integrality_locus();
    return j.dump();
}

std::string to_json(const AsymptoticNat& x) {
    json j;
    j["coefficients"] = x.coefficients();
    j["display"] = x.str();
    return j.dump();
}

std::string to_json(const ConvexSubsemigroup& d) {
    json j;
    j["kind"] = d.str();
    return j.dump();
}

RingContext context_from_json(const std::string& text) {
    return context_from(parse(text), "context");
}

ProductElement element_from_json(const std::string& text,
                                 const std::optional<RingContext>& fallback) {
    return element_from(parse(text), fallback, "element");
}

std::vector<ProductElement> generators_from_json(const std::string& text,
                                                 const std::optional<RingContext>& fallback) {
    json j = parse(text);
    if (!j.is_array()) throw ParseError("generators", "expected an array");
    std::vector<ProductElement> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(element_from(j[i], fallback, "generators[" + std::to_string(i) + "]"));
    return out;
}

PrimeIdeal prime_from_json(const std::string& text, const RingContext& ctx) {
    return prime_from(parse(text), ctx, "prime");
}

OpenSet open_set_from_json(const std::string& text, const RingContext& ctx) {
    json j = parse(text);
    if (!j.is_array()) throw ParseError("open", "expected an array of points");
    std::vector<PrimeIdeal> points;
    for (std::size_t i = 0; i < j.size(); ++i)
        points.push_back(prime_from(j[i], ctx, "open[" + std::to_string(i) + "]"));
    return OpenSet::from_points(ctx, points);
}

AdeleElement adele_from_json(const std::string& text,
                             const std::optional<RingContext>& fallback) {
    json j = parse(text);
    std::optional<RingContext> ctx = fallback;
    if (j.is_object() && j.contains("context"))
        ctx = context_from(j.at("context"), "adele.context");
    if (!ctx) throw ParseError("adele.context", "no context given and none to fall back on");
    if (!j.is_object() || !j.contains("components"))
        throw ParseError("adele", "expected {context, components}");
    const json& comps = j.at("components");
    if (!comps.is_array() || comps.size() != ctx->size())
        throw ParseError("adele.components",
                         "expected exactly " + std::to_string(ctx->size()) + " components");
    std::vector<PAdicRational> parts;
    parts.reserve(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i)
        parts.push_back(rational_from(comps[i], ctx->prime_at(i), ctx->precision(),
                                      "adele.components[" + std::to_string(i) + "]"));
    return AdeleElement(*ctx, std::move(parts));
}

AsymptoticNat asymptotic_from_json(const std::string& text) {
    json j = parse(text);
    const json* coeffs = &j;
    if (j.is_object() && j.contains("coefficients")) coeffs = &j.at("coefficients");
    if (!coeffs->is_array()) throw ParseError("coefficients", "expected an array");
    std::vector<long long> out;
    for (const auto& c : *coeffs) {
        if (!c.is_number_integer()) throw ParseError("coefficients", "expected integers");
        out.push_back(c.get<long long>());
    }
    try {
        return AsymptoticNat(std::move(out));
    } catch (const std::invalid_argument& e) {
        throw ParseError("coefficients", e.what());
    }
}

} // namespace zhat
