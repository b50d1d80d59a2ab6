#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zhat/product.hpp"

namespace zhat {

/**
 * Named verification suites.  Each one checks a family of structural facts
 * about the ring, its spectrum, its sheaf or its adeles at desk scale, with
 * sample counts pinned in the suite itself.  Suites are pure functions of
 * (context, seed), so reports are reproducible byte for byte and suites can
 * run concurrently.
 */
struct VerifyConfig {
    RingContext ctx;
    std::uint64_t seed = 0;
    /// Test fixture: the named suite corrupts one expected value on purpose.
    std::string corrupt;
};

struct SuiteResult {
    std::string name;
    bool passed = false;
    long checks = 0;
    std::string detail; // first failure, empty when passed
};

/// Registry order is the report order.
const std::vector<std::string>& suite_names();

bool has_suite(const std::string& name);

SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg);

/// Runs the named suites (all of them when `names` is empty), concurrently
/// when `parallel` is set; results come back in registry order.
std::vector<SuiteResult> run_suites(const VerifyConfig& cfg,
                                    const std::vector<std::string>& names = {},
                                    bool parallel = true);

} // namespace zhat
