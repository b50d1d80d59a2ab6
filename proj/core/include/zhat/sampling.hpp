#pragma once

#include <cstdint>
#include <random>

#include "zhat/ideal.hpp"
#include "zhat/product.hpp"

namespace zhat {

/**
 * Deterministic sampler for randomized suites.  All draws go through
 * mt19937_64 with reductions that do not depend on library-defined
 * distributions, so a seed reproduces the same stream on every platform.
 */
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next_u64() { return rng_(); }

    /// Uniform-ish integer in [lo, hi], inclusive.
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool coin(unsigned denominator) { return next_u64() % denominator == 0; }

    mpz_class residue(const mpz_class& modulus);

    /// Uniform residue in [0, p^N).
    PAdicInt padic(long prime, int precision);

    /// Mixes valuations: occasional zero, frequent positive valuation.
    PAdicInt padic_weighted(long prime, int precision);

    ProductElement element(const RingContext& ctx);
    ProductElement element_weighted(const RingContext& ctx);

    /// A random proper finitely generated ideal (nonunit on a random base).
    FinGenIdeal proper_ideal(const RingContext& ctx, int max_generators);

private:
    std::mt19937_64 rng_;
};

} // namespace zhat
