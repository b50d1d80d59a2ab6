#include "zhat/adele.hpp"

#include <stdexcept>
#include <utility>

namespace zhat {

AdeleElement::AdeleElement(RingContext context, std::vector<PAdicRational> components)
    : ctx_(std::move(context)), components_(std::move(components)) {
    if (components_.size() != ctx_.size())
        throw MixedContext("component count does not match the context");
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (components_[i].prime() != ctx_.prime_at(i) ||
            components_[i].precision() != ctx_.precision())
            throw MixedContext("component does not match the context slot");
        if (components_[i].is_integral()) integrality_locus_.push_back(ctx_.prime_at(i));
    }
}

AdeleElement AdeleElement::from_fraction(const ProductElement& f, const mpz_class& n) {
    if (n < 1) throw std::invalid_argument("denominator must be a positive integer");
    const RingContext& ctx = f.context();
    std::vector<PAdicRational> comps;
    comps.reserve(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        long p = ctx.prime_at(i);
        PAdicRational inv_n = rational_embed(1, n, p, ctx.precision());
        comps.push_back(PAdicRational::from_integral(f.component_at(i)) * inv_n);
    }
    return AdeleElement(ctx, std::move(comps));
}

AdeleElement AdeleElement::embed(const ProductElement& f) { return from_fraction(f, 1); }

AdeleElement AdeleElement::diagonal(const RingContext& ctx, const mpz_class& num,
                                    const mpz_class& den) {
    std::vector<PAdicRational> comps;
    comps.reserve(ctx.size());
    for (long p : ctx.primes()) comps.push_back(rational_embed(num, den, p, ctx.precision()));
    return AdeleElement(ctx, std::move(comps));
}

AdeleElement AdeleElement::one(const RingContext& ctx) { return diagonal(ctx, 1, 1); }

bool AdeleElement::is_invertible() const {
    for (const auto& c : components_)
        if (c.is_zero()) return false;
    return true;
}

AdeleElement AdeleElement::inverse() const {
    std::vector<PAdicRational> comps;
    comps.reserve(components_.size());
    for (const auto& c : components_) comps.push_back(c.inverse());
    return AdeleElement(ctx_, std::move(comps));
}

void AdeleElement::require_same_context(const AdeleElement& o) const {
    if (!(ctx_ == o.ctx_)) throw MixedContext();
}

AdeleElement AdeleElement::operator-() const {
    std::vector<PAdicRational> comps;
    comps.reserve(components_.size());
    for (const auto& c : components_) comps.push_back(-c);
    return AdeleElement(ctx_, std::move(comps));
}

namespace {
template <typename Op>
AdeleElement zip(const AdeleElement& a, const AdeleElement& b, Op op) {
    std::vector<PAdicRational> comps;
    comps.reserve(a.context().size());
    for (std::size_t i = 0; i < a.context().size(); ++i)
        comps.push_back(op(a.component_at(i), b.component_at(i)));
    return AdeleElement(a.context(), std::move(comps));
}
} // namespace

AdeleElement operator+(const AdeleElement& a, const AdeleElement& b) {
    a.require_same_context(b);
    return zip(a, b, [](const PAdicRational& x, const PAdicRational& y) { return x + y; });
}

AdeleElement operator-(const AdeleElement& a, const AdeleElement& b) {
    a.require_same_context(b);
    return zip(a, b, [](const PAdicRational& x, const PAdicRational& y) { return x - y; });
}

AdeleElement operator*(const AdeleElement& a, const AdeleElement& b) {
    a.require_same_context(b);
    return zip(a, b, [](const PAdicRational& x, const PAdicRational& y) { return x * y; });
}

// ---------------------------------------------------------------------------

AdelePrime::AdelePrime(RingContext context, long prime)
    : ctx_(std::move(context)), prime_(prime) {
    ctx_.index_of(prime); // validates membership
}

std::vector<AdelePrime> spec_adeles(const RingContext& ctx) {
    std::vector<AdelePrime> out;
    out.reserve(ctx.size());
    for (long p : ctx.primes()) out.emplace_back(ctx, p);
    return out;
}

std::optional<AdelePrime> extend_to_adeles(const PrimeIdeal& p) {
    if (p.level() == PrimeLevel::Maximal) return std::nullopt; // p is invertible
    return AdelePrime(p.context(), p.chain_prime());
}

AdeleComponentField::AdeleComponentField(AdelePrime prime, bool localization)
    : prime_(std::move(prime)), localization_(localization) {}

PAdicRational AdeleComponentField::project(const AdeleElement& f) const {
    if (!(f.context() == prime_.context())) throw MixedContext();
    return f.component(prime_.prime());
}

PAdicRational AdeleComponentField::map_fraction(const AdeleElement& num,
                                                const AdeleElement& den) const {
    if (prime_.contains(den)) throw DenominatorInPrime();
    return project(num) * project(den).inverse();
}

AdeleComponentField adele_quotient(const AdelePrime& q) {
    return AdeleComponentField(q, false);
}

AdeleComponentField adele_localize(const AdelePrime& q) {
    return AdeleComponentField(q, true);
}

bool equal_at_precision(const AdeleElement& a, const AdeleElement& b) {
    if (!(a.context() == b.context())) throw MixedContext();
    for (std::size_t i = 0; i < a.context().size(); ++i)
        if (!equal_at_precision(a.component_at(i), b.component_at(i))) return false;
    return true;
}

} // namespace zhat
