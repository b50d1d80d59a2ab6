#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "zhat/filters.hpp"
#include "zhat/ideal.hpp"

namespace zhat {

enum class PrimeLevel { Minimal, Maximal };

std::string level_name(PrimeLevel level);

/**
 * A point of Spec(prod Z_p).  Every chain is indexed by one prime p of the
 * context and has exactly two points: the minimal prime (f(p) = 0) below the
 * maximal one (f(p) in p Z_p).
 */
class PrimeIdeal {
public:
    PrimeIdeal(RingContext context, long chain_prime, PrimeLevel level);

    const RingContext& context() const { return ctx_; }
    long chain_prime() const { return chain_prime_; }
    PrimeLevel level() const { return level_; }

    /// Normal form: Infinity (minimal) or 1 (maximal) at the chain prime, 0 off it.
    FinGenIdeal ideal() const;
    ProductElement generator() const { return ideal().canonical_generator(); }

    Ultrafilter chain_ultrafilter() const { return Ultrafilter(ctx_, chain_prime_); }

    bool contains(const ProductElement& f) const { return ideal().contains(f); }

    bool operator==(const PrimeIdeal& o) const {
        return ctx_ == o.ctx_ && chain_prime_ == o.chain_prime_ && level_ == o.level_;
    }

private:
    RingContext ctx_;
    long chain_prime_;
    PrimeLevel level_;
};

/**
 * Prime classification of a finitely generated ideal: prime iff the profile
 * is 0 everywhere except a single prime q where it is 1 (maximal) or the
 * Infinity marker (minimal).  Everything else returns nullopt.
 */
std::optional<PrimeIdeal> classify_prime(const FinGenIdeal& ideal);

/// All 2|S| points, grouped per chain: minimal then maximal, primes ascending.
std::vector<PrimeIdeal> spec_enumerate(const RingContext& ctx);

/// The single maximal ideal over a prime (pm-ring property): its chain's top.
PrimeIdeal unique_maximal_over(const PrimeIdeal& p);

/**
 * The ideals containing a prime, smallest first.  For a minimal prime the
 * chain runs w(p) = Infinity, N, N-1, ..., 1, 0; for a maximal prime it is
 * just the prime and the whole ring.  Always linearly ordered.
 */
std::vector<FinGenIdeal> ideals_above(const PrimeIdeal& p);

PrimeIdeal minimal_prime_of(const Ultrafilter& u);
PrimeIdeal maximal_prime_of(const Ultrafilter& u);

/**
 * Order of the value semigroup of Z_p: (a) <= (b) iff a | b iff
 * v(a) <= v(b).  The returned ordering compares valuations; throws
 * PrecisionExhausted when both inputs vanish to all N digits.
 */
std::strong_ordering value_compare(const PAdicInt& a, const PAdicInt& b);

/// a | b in Z_p, decided through value_compare.
bool value_divides(const PAdicInt& a, const PAdicInt& b);

/// Semigroup sum (a) + (b) = (ab): valuation addition saturating at the cap.
Valuation value_add(const PAdicInt& a, const PAdicInt& b);

} // namespace zhat
