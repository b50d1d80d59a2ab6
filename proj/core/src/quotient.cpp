#include "zhat/quotient.hpp"

#include <stdexcept>
#include <utility>

namespace zhat {

ResidueFieldElem::ResidueFieldElem(long prime, long value) : prime_(prime) {
    if (!is_prime_number(prime)) throw NonPrimeModulus(prime);
    value_ = ((value % prime) + prime) % prime;
}

ResidueFieldElem operator+(ResidueFieldElem a, ResidueFieldElem b) {
    if (a.prime_ != b.prime_) throw MixedContext();
    return ResidueFieldElem(a.prime_, a.value_ + b.value_);
}

ResidueFieldElem operator-(ResidueFieldElem a, ResidueFieldElem b) {
    if (a.prime_ != b.prime_) throw MixedContext();
    return ResidueFieldElem(a.prime_, a.value_ - b.value_);
}

ResidueFieldElem operator*(ResidueFieldElem a, ResidueFieldElem b) {
    if (a.prime_ != b.prime_) throw MixedContext();
    return ResidueFieldElem(a.prime_, a.value_ * b.value_);
}

ResidueFieldElem ResidueFieldElem::inverse() const {
    if (value_ == 0) throw NotAUnit();
    // Fermat: v^(p-2) mod p.
    long result = 1, base = value_, e = prime_ - 2;
    while (e > 0) {
        if (e & 1) result = (result * base) % prime_;
        base = (base * base) % prime_;
        e >>= 1;
    }
    return ResidueFieldElem(prime_, result);
}

QuotientRing::QuotientRing(PrimeIdeal prime) : prime_(std::move(prime)) {}

std::string QuotientRing::kind_name() const {
    return is_residue_field() ? "residue-field" : "component-ring";
}

ResidueFieldElem QuotientRing::project_residue(const ProductElement& f) const {
    if (!is_residue_field())
        throw std::logic_error("projection to F_p is only defined at a maximal prime");
    const PAdicInt& c = f.component(prime_.chain_prime());
    mpz_class r = c.residue() % prime_.chain_prime();
    return ResidueFieldElem(prime_.chain_prime(), r.get_si());
}

PAdicInt QuotientRing::project_component(const ProductElement& f) const {
    if (is_residue_field())
        throw std::logic_error("component projection is only defined at a minimal prime");
    return f.component(prime_.chain_prime());
}

PAdicInt QuotientRing::lift_root(const IntPolynomial& poly,
                                 const PAdicInt& approximate_root) const {
    if (is_residue_field())
        throw std::logic_error("residue fields carry no lifting problem");
    if (approximate_root.prime() != prime_.chain_prime()) throw MixedContext();
    return hensel_lift(poly, approximate_root);
}

QuotientRing quotient(const PrimeIdeal& p) { return QuotientRing(p); }

} // namespace zhat
