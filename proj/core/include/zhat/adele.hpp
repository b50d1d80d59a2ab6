#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zhat/localization.hpp"
#include "zhat/spectrum.hpp"

namespace zhat {

/**
 * An element of the finite-adele ring over the context: the localization of
 * prod Z_p at the diagonal positive integers.  With finitely many primes the
 * restricted product is the full product of the Q_p; the integrality locus
 * is still tracked so the integral subring stays visible as a predicate.
 */
class AdeleElement {
public:
    AdeleElement(RingContext context, std::vector<PAdicRational> components);

    /// Componentwise f(p) / n for a positive integer n.
    static AdeleElement from_fraction(const ProductElement& f, const mpz_class& n);
    static AdeleElement embed(const ProductElement& f);
    static AdeleElement diagonal(const RingContext& ctx, const mpz_class& num,
                                 const mpz_class& den);
    static AdeleElement one(const RingContext& ctx);

    const RingContext& context() const { return ctx_; }
    const PAdicRational& component(long p) const { return components_[ctx_.index_of(p)]; }
    const PAdicRational& component_at(std::size_t i) const { return components_.at(i); }

    /// {p : the component has no pole}.
    const PrimeSet& integrality_locus() const { return integrality_locus_; }
    bool is_integral() const { return integrality_locus_.size() == ctx_.size(); }

    bool is_invertible() const;
    AdeleElement inverse() const; // NotAUnit when some component is zero

    AdeleElement operator-() const;
    friend AdeleElement operator+(const AdeleElement& a, const AdeleElement& b);
    friend AdeleElement operator-(const AdeleElement& a, const AdeleElement& b);
    friend AdeleElement operator*(const AdeleElement& a, const AdeleElement& b);

    bool operator==(const AdeleElement& o) const {
        return ctx_ == o.ctx_ && components_ == o.components_;
    }

private:
    void require_same_context(const AdeleElement& o) const;

    RingContext ctx_;
    std::vector<PAdicRational> components_;
    PrimeSet integrality_locus_;
};

/**
 * A point of Spec of the adele ring: the extension of the minimal prime at
 * p, which is simultaneously minimal and maximal here (the maximal primes of
 * the product extend to the unit ideal, since every integer is invertible).
 */
class AdelePrime {
public:
    AdelePrime(RingContext context, long prime);

    const RingContext& context() const { return ctx_; }
    long prime() const { return prime_; }

    bool contains(const AdeleElement& f) const { return f.component(prime_).is_zero(); }

    /// Contraction back to the product ring: the chain's minimal prime.
    PrimeIdeal contraction() const { return PrimeIdeal(ctx_, prime_, PrimeLevel::Minimal); }

    bool operator==(const AdelePrime& o) const {
        return ctx_ == o.ctx_ && prime_ == o.prime_;
    }

private:
    RingContext ctx_;
    long prime_;
};

/// Exactly |S| primes, one per chain of the underlying product.
std::vector<AdelePrime> spec_adeles(const RingContext& ctx);

/// Extension of a prime of the product: nullopt means the unit ideal
/// (every maximal prime dies, its chain prime being invertible).
std::optional<AdelePrime> extend_to_adeles(const PrimeIdeal& p);

/**
 * Both the quotient by an adele prime and the localization at it are the
 * component field Q_p, reached by the coordinate projection.
 */
class AdeleComponentField {
public:
    AdeleComponentField(AdelePrime prime, bool localization);

    long prime() const { return prime_.prime(); }
    std::string kind_name() const { return "component-field"; }
    bool is_localization() const { return localization_; }

    PAdicRational project(const AdeleElement& f) const;
    PAdicRational map_fraction(const AdeleElement& num, const AdeleElement& den) const;
    bool in_kernel(const AdeleElement& f) const { return prime_.contains(f); }

private:
    AdelePrime prime_;
    bool localization_;
};

AdeleComponentField adele_quotient(const AdelePrime& q);
AdeleComponentField adele_localize(const AdelePrime& q);

/// Componentwise window congruence; see equal_at_precision on rationals.
bool equal_at_precision(const AdeleElement& a, const AdeleElement& b);

} // namespace zhat
