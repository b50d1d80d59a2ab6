#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zhat/padic.hpp"

namespace zhat {

/// Sorted, duplicate-free set of primes from a context's index set.
using PrimeSet = std::vector<long>;

PrimeSet ps_union(const PrimeSet& a, const PrimeSet& b);
PrimeSet ps_intersection(const PrimeSet& a, const PrimeSet& b);
PrimeSet ps_difference(const PrimeSet& a, const PrimeSet& b);
bool ps_contains(const PrimeSet& s, long p);
bool ps_subset(const PrimeSet& a, const PrimeSet& b);

/**
 * The ambient ring R = prod_{p in S} Z_p for a finite, strictly increasing
 * prime set S, with one shared absolute precision N for all components.
 */
class RingContext {
public:
    static constexpr int kDefaultPrecision = 24;

    explicit RingContext(std::vector<long> primes, int precision = kDefaultPrecision);

    const std::vector<long>& primes() const { return primes_; }
    int precision() const { return precision_; }
    std::size_t size() const { return primes_.size(); }
    long prime_at(std::size_t i) const { return primes_.at(i); }

    bool has_prime(long p) const;
    std::size_t index_of(long p) const; // throws std::invalid_argument

    /// Sub-context on the first k primes.
    RingContext prefix(std::size_t k) const;

    bool operator==(const RingContext& o) const {
        return primes_ == o.primes_ && precision_ == o.precision_;
    }

private:
    std::vector<long> primes_;
    int precision_;
};

/// One component per prime of the context, stored densely in context order.
class ProductElement {
public:
    ProductElement(RingContext context, std::vector<PAdicInt> components);

    static ProductElement from_residues(const RingContext& ctx,
                                        const std::vector<mpz_class>& residues);
    /// Diagonal embedding of an integer.
    static ProductElement diagonal(const RingContext& ctx, const mpz_class& n);
    static ProductElement zero(const RingContext& ctx);
    static ProductElement one(const RingContext& ctx);

    const RingContext& context() const { return ctx_; }
    std::size_t size() const { return components_.size(); }
    const PAdicInt& component(long p) const { return components_[ctx_.index_of(p)]; }
    const PAdicInt& component_at(std::size_t i) const { return components_.at(i); }

    bool is_zero() const;

    ProductElement operator-() const;
    friend ProductElement operator+(const ProductElement& a, const ProductElement& b);
    friend ProductElement operator-(const ProductElement& a, const ProductElement& b);
    friend ProductElement operator*(const ProductElement& a, const ProductElement& b);

    /// Componentwise inverse; throws NotAUnit unless every component is a unit.
    ProductElement inverse() const;

    bool operator==(const ProductElement& o) const;

    std::string str() const;

private:
    void require_same_context(const ProductElement& o) const;

    RingContext ctx_;
    std::vector<PAdicInt> components_;
};

/// e_X: the element that is 1 on the support X and 0 elsewhere.
class Idempotent {
public:
    Idempotent(RingContext context, PrimeSet support);

    const RingContext& context() const { return ctx_; }
    const PrimeSet& support() const { return support_; }
    ProductElement element() const;

    Idempotent complement() const; // 1 - e_X = e_{S \ X}
    friend Idempotent meet(const Idempotent& a, const Idempotent& b); // e_X e_Y
    friend Idempotent join(const Idempotent& a, const Idempotent& b); // e_X + e_Y - e_X e_Y

    bool operator==(const Idempotent& o) const {
        return ctx_ == o.ctx_ && support_ == o.support_;
    }

private:
    RingContext ctx_;
    PrimeSet support_;
};

enum class Predicate { IsZero, InMaximal, IsUnit };

/**
 * The index set where a componentwise predicate holds of f.  `certain` is
 * false exactly when an IsZero answer rests on a residue that vanishes to all
 * N digits (which cannot be told apart from a tiny nonzero value).
 */
struct TruthSet {
    Predicate predicate;
    PrimeSet members;
    bool certain;
};

TruthSet truth_set(const ProductElement& f, Predicate predicate);

/// Every component is a unit; equivalently truth_set(f, InMaximal) is empty.
bool is_unit(const ProductElement& f);

/**
 * The cofactor g with g = 1/f off the nonunit locus X and g = 0 on it,
 * so that f * g = 1 - e_X exactly.
 */
struct DivisionWitness {
    ProductElement cofactor;
    PrimeSet nonunit_locus;
};

DivisionWitness division_witness(const ProductElement& f);

} // namespace zhat
