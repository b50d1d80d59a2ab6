#pragma once

#include <string>

#include "zhat/spectrum.hpp"

namespace zhat {

/**
 * The localization R_p at a point of the spectrum, realized as its classified
 * component ring with an explicit map.
 *
 * At the maximal prime of the chain the localization is the component ring
 * Z_p: fractions f/g need g(p) to be a unit and normalize to f(p) g(p)^-1.
 * At the minimal prime it is the component field Q_p: g(p) must be nonzero
 * and the exponent may go negative.
 *
 * The kernel of the localization map is the chain's minimal prime in either
 * case.  Fractions are normalized eagerly, so equality stays decidable.
 */
class LocalizedRing {
public:
    explicit LocalizedRing(PrimeIdeal prime);

    const PrimeIdeal& defining_prime() const { return prime_; }
    bool is_field() const { return prime_.level() == PrimeLevel::Minimal; }
    long component_prime() const { return prime_.chain_prime(); }
    std::string kind_name() const;

    /// tau(f) = f/1.
    PAdicRational map_element(const ProductElement& f) const;

    /// f/g with g outside the defining prime; throws DenominatorInPrime.
    PAdicRational map_fraction(const ProductElement& numerator,
                               const ProductElement& denominator) const;

    /// Kernel of the localization map: the chain's minimal prime.
    FinGenIdeal kernel() const;

    bool in_kernel(const ProductElement& f) const { return kernel().contains(f); }

    /**
     * Hensel witness.  In the component-ring kind this runs the Newton lift;
     * in the field kind the maximal ideal is zero, so a simple root must
     * already vanish to full precision and is returned unchanged.
     */
    PAdicInt lift_root(const IntPolynomial& poly, const PAdicInt& approximate_root) const;

private:
    PrimeIdeal prime_;
};

LocalizedRing localize(const PrimeIdeal& p);

/// Kernel of the localization morphism at p: the minimal prime of its chain.
FinGenIdeal localization_kernel(const PrimeIdeal& p);

} // namespace zhat
