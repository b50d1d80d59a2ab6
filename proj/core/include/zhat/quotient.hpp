#pragma once

#include <string>

#include "zhat/spectrum.hpp"

namespace zhat {

/// Element of the residue field F_p, with arithmetic mod p.
class ResidueFieldElem {
public:
    ResidueFieldElem(long prime, long value);

    long prime() const { return prime_; }
    long value() const { return value_; }

    friend ResidueFieldElem operator+(ResidueFieldElem a, ResidueFieldElem b);
    friend ResidueFieldElem operator-(ResidueFieldElem a, ResidueFieldElem b);
    friend ResidueFieldElem operator*(ResidueFieldElem a, ResidueFieldElem b);
    ResidueFieldElem inverse() const; // NotAUnit on zero

    bool operator==(const ResidueFieldElem&) const = default;

private:
    long prime_;
    long value_; // in [0, p)
};

/**
 * The quotient R / p, realized as its classified component ring:
 * a maximal prime yields the residue field F_p (projection f -> f(p) mod p),
 * a minimal prime yields the component ring Z_p (projection f -> f(p)).
 */
class QuotientRing {
public:
    explicit QuotientRing(PrimeIdeal prime);

    const PrimeIdeal& defining_prime() const { return prime_; }
    bool is_residue_field() const { return prime_.level() == PrimeLevel::Maximal; }
    long component_prime() const { return prime_.chain_prime(); }
    std::string kind_name() const;

    /// Projection for the residue-field kind.
    ResidueFieldElem project_residue(const ProductElement& f) const;
    /// Projection for the component-ring kind.
    PAdicInt project_component(const ProductElement& f) const;

    /// Kernel membership: exactly the defining prime.
    bool in_kernel(const ProductElement& f) const { return prime_.contains(f); }

    /// Hensel witness inside the component ring (component-ring kind only).
    PAdicInt lift_root(const IntPolynomial& poly, const PAdicInt& approximate_root) const;

private:
    PrimeIdeal prime_;
};

QuotientRing quotient(const PrimeIdeal& p);

} // namespace zhat
