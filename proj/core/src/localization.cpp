#include "zhat/localization.hpp"

#include <utility>

namespace zhat {

LocalizedRing::LocalizedRing(PrimeIdeal prime) : prime_(std::move(prime)) {}

std::string LocalizedRing::kind_name() const {
    return is_field() ? "component-field" : "component-ring";
}

PAdicRational LocalizedRing::map_element(const ProductElement& f) const {
    if (!(f.context() == prime_.context())) throw MixedContext();
    return PAdicRational::from_integral(f.component(prime_.chain_prime()));
}

PAdicRational LocalizedRing::map_fraction(const ProductElement& numerator,
                                          const ProductElement& denominator) const {
    if (!(numerator.context() == prime_.context()) ||
        !(denominator.context() == prime_.context()))
        throw MixedContext();
    const PAdicInt& num = numerator.component(prime_.chain_prime());
    const PAdicInt& den = denominator.component(prime_.chain_prime());
    if (prime_.contains(denominator)) throw DenominatorInPrime();
    if (is_field()) {
        // den(p) != 0 guaranteed above; invert in Q_p.
        return PAdicRational::from_integral(num) * PAdicRational::from_integral(den).inverse();
    }
    // den(p) is a unit of Z_p.
    return PAdicRational::from_integral(num * den.inverse());
}

FinGenIdeal LocalizedRing::kernel() const {
    return PrimeIdeal(prime_.context(), prime_.chain_prime(), PrimeLevel::Minimal).ideal();
}

PAdicInt LocalizedRing::lift_root(const IntPolynomial& poly,
                                  const PAdicInt& approximate_root) const {
    if (approximate_root.prime() != prime_.chain_prime()) throw MixedContext();
    if (is_field()) {
        mpz_class value = poly.eval_mod(approximate_root.residue(), approximate_root.modulus());
        if (value != 0) throw NotApproximateRoot();
        return approximate_root;
    }
    return hensel_lift(poly, approximate_root);
}

LocalizedRing localize(const PrimeIdeal& p) { return LocalizedRing(p); }

FinGenIdeal localization_kernel(const PrimeIdeal& p) { return LocalizedRing(p).kernel(); }

} // namespace zhat
