#include "zhat/spectrum.hpp"

#include <stdexcept>
#include <utility>

namespace zhat {

std::string level_name(PrimeLevel level) {
    return level == PrimeLevel::Minimal ? "minimal" : "maximal";
}

PrimeIdeal::PrimeIdeal(RingContext context, long chain_prime, PrimeLevel level)
    : ctx_(std::move(context)), chain_prime_(chain_prime), level_(level) {
    ctx_.index_of(chain_prime); // validates membership
}

FinGenIdeal PrimeIdeal::ideal() const {
    std::vector<IdealExponent> exps;
    exps.reserve(ctx_.size());
    for (long p : ctx_.primes()) {
        if (p == chain_prime_)
            exps.push_back(level_ == PrimeLevel::Minimal ? IdealExponent::infinity()
                                                         : IdealExponent::finite(1));
        else
            exps.push_back(IdealExponent::finite(0));
    }
    return FinGenIdeal::from_exponents(ctx_, std::move(exps));
}

std::optional<PrimeIdeal> classify_prime(const FinGenIdeal& ideal) {
    const RingContext& ctx = ideal.context();
    std::optional<std::size_t> pivot;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        IdealExponent e = ideal.exponents()[i];
        if (e == IdealExponent::finite(0)) continue;
        if (pivot) return std::nullopt; // two nontrivial slots: not prime
        if (e.is_finite() && e.value() != 1) return std::nullopt;
        pivot = i;
    }
    if (!pivot) return std::nullopt; // unit ideal
    IdealExponent e = ideal.exponents()[*pivot];
    return PrimeIdeal(ctx, ctx.prime_at(*pivot),
                      e.is_finite() ? PrimeLevel::Maximal : PrimeLevel::Minimal);
}

std::vector<PrimeIdeal> spec_enumerate(const RingContext& ctx) {
    std::vector<PrimeIdeal> out;
    out.reserve(2 * ctx.size());
    for (long p : ctx.primes()) {
        out.emplace_back(ctx, p, PrimeLevel::Minimal);
        out.emplace_back(ctx, p, PrimeLevel::Maximal);
    }
    return out;
}

PrimeIdeal unique_maximal_over(const PrimeIdeal& p) {
    return PrimeIdeal(p.context(), p.chain_prime(), PrimeLevel::Maximal);
}

std::vector<FinGenIdeal> ideals_above(const PrimeIdeal& p) {
    const RingContext& ctx = p.context();
    std::size_t slot = ctx.index_of(p.chain_prime());
    std::vector<IdealExponent> ladder;
    if (p.level() == PrimeLevel::Minimal) {
        ladder.push_back(IdealExponent::infinity());
        for (int k = ctx.precision(); k >= 0; --k) ladder.push_back(IdealExponent::finite(k));
    } else {
        ladder.push_back(IdealExponent::finite(1));
        ladder.push_back(IdealExponent::finite(0));
    }

    std::vector<FinGenIdeal> out;
    out.reserve(ladder.size());
    for (IdealExponent step : ladder) {
        std::vector<IdealExponent> exps(ctx.size(), IdealExponent::finite(0));
        exps[slot] = step;
        out.push_back(FinGenIdeal::from_exponents(ctx, std::move(exps)));
    }
    return out;
}

PrimeIdeal minimal_prime_of(const Ultrafilter& u) {
    return PrimeIdeal(u.context(), u.point(), PrimeLevel::Minimal);
}

PrimeIdeal maximal_prime_of(const Ultrafilter& u) {
    return PrimeIdeal(u.context(), u.point(), PrimeLevel::Maximal);
}

std::strong_ordering value_compare(const PAdicInt& a, const PAdicInt& b) {
    if (a.prime() != b.prime() || a.precision() != b.precision()) throw MixedContext();
    Valuation va = a.valuation();
    Valuation vb = b.valuation();
    if (!va.is_exact() && !vb.is_exact()) throw PrecisionExhausted();
    return va <=> vb;
}

bool value_divides(const PAdicInt& a, const PAdicInt& b) {
    return value_compare(a, b) <= 0;
}

Valuation value_add(const PAdicInt& a, const PAdicInt& b) {
    if (a.prime() != b.prime() || a.precision() != b.precision()) throw MixedContext();
    return Valuation::plus(a.valuation(), b.valuation(), a.precision());
}

} // namespace zhat
