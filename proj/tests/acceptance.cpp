// Acceptance suite: runs the structural criteria end to end at their pinned
// parameters and prints one pass/fail line per criterion.  Exits nonzero if
// any criterion fails.  All arithmetic checks are bit-exact; each criterion
// also carries a wall-clock budget.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "zhat/verify.hpp"

namespace {

struct Criterion {
    std::string label;
    std::vector<std::string> suites;
    double budget_seconds;
};

} // namespace

int main() {
    const zhat::VerifyConfig cfg{zhat::RingContext({2, 3, 5, 7}, 24), 20240801, ""};

    const std::vector<Criterion> criteria = {
        {"1. unit criterion and division witness (500 random f, S={2,3,5,7}, N=24)",
         {"unit-criterion", "division-witness"},
         1.0},
        {"2. ideal sandwich and ultrafilter round trips (200 ideals x 50 probes)",
         {"ideal-sandwich", "filter-of-ideal"},
         2.0},
        {"3. spectrum structure: chains, pm-ring, linear order, bijections",
         {"spec-chains", "pm-ring", "ideal-chain", "spec-bijection"},
         1.0},
        {"4. quotients, localizations, and the Hensel witness sqrt(2) = 108 mod 343",
         {"quotient-rings", "localization-rings", "hensel-lifting"},
         2.0},
        {"5. sheaf: sections vs inverse limit, gluing, boolean model",
         {"section-rings", "sheaf-axiom", "boolean-model"},
         30.0},
        {"6. adeles: spectrum size, unit extensions, component-field quotients",
         {"adele-spec", "adele-quotient"},
         1.0},
        {"7. asymptotic order and the galois correspondence (10^4 pairs)",
         {"asymptotic-order", "galois-correspondence"},
         1.0},
        {"8. negative controls: non-primes, non-opens, impossible lifts",
         {"negative-controls"},
         30.0},
    };

    bool all_passed = true;
    for (const auto& criterion : criteria) {
        auto start = std::chrono::steady_clock::now();
        bool passed = true;
        long checks = 0;
        std::string detail;
        for (const auto& suite : criterion.suites) {
            zhat::SuiteResult r = zhat::run_suite(suite, cfg);
            checks += r.checks;
            if (!r.passed) {
                passed = false;
                detail = r.name + ": " + r.detail;
            }
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > criterion.budget_seconds) {
            passed = false;
            detail = "runtime " + std::to_string(elapsed) + "s exceeds " +
                     std::to_string(criterion.budget_seconds) + "s";
        }
        all_passed = all_passed && passed;
        std::printf("%s  %s  [%ld checks, %.3fs]%s%s\n", passed ? "PASS" : "FAIL",
                    criterion.label.c_str(), checks, elapsed, detail.empty() ? "" : "  -- ",
                    detail.c_str());
    }
    return all_passed ? 0 : 1;
}
