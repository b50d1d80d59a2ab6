#include "zhat/filters.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace zhat {

Filter::Filter(RingContext context, PrimeSet base)
    : ctx_(std::move(context)), base_(std::move(base)) {
    std::sort(base_.begin(), base_.end());
    base_.erase(std::unique(base_.begin(), base_.end()), base_.end());
    if (base_.empty()) throw std::invalid_argument("a proper filter has a nonempty base");
    for (long p : base_)
        if (!ctx_.has_prime(p))
            throw std::invalid_argument("base prime " + std::to_string(p) +
                                        " not in context");
}

Ultrafilter::Ultrafilter(RingContext context, long point)
    : ctx_(std::move(context)), point_(point) {
    if (!ctx_.has_prime(point))
        throw std::invalid_argument("point " + std::to_string(point) + " not in context");
}

std::vector<Ultrafilter> enumerate_ultrafilters(const RingContext& ctx) {
    std::vector<Ultrafilter> out;
    out.reserve(ctx.size());
    for (long p : ctx.primes()) out.emplace_back(ctx, p);
    return out;
}

Filter filter_of_ideal(const FinGenIdeal& ideal) {
    PrimeSet base;
    const RingContext& ctx = ideal.context();
    for (std::size_t i = 0; i < ctx.size(); ++i)
        if (ideal.exponents()[i] > IdealExponent::finite(0)) base.push_back(ctx.prime_at(i));
    if (base.empty()) throw ImproperIdeal("unit ideal has no filter");
    return Filter(ctx, std::move(base));
}

Filter filter_of_ideal(const RingContext& ctx, std::vector<ProductElement> generators) {
    return filter_of_ideal(FinGenIdeal::generated_by(ctx, std::move(generators)));
}

FinGenIdeal lower_ideal(const Filter& f) {
    const RingContext& ctx = f.context();
    std::vector<IdealExponent> exps;
    exps.reserve(ctx.size());
    for (long p : ctx.primes())
        exps.push_back(ps_contains(f.base(), p) ? IdealExponent::infinity()
                                                : IdealExponent::finite(0));
    return FinGenIdeal::from_exponents(ctx, std::move(exps));
}

FinGenIdeal lower_ideal(const Ultrafilter& u) { return lower_ideal(u.filter()); }

FinGenIdeal upper_ideal(const Filter& f) {
    const RingContext& ctx = f.context();
    std::vector<IdealExponent> exps;
    exps.reserve(ctx.size());
    for (long p : ctx.primes())
        exps.push_back(ps_contains(f.base(), p) ? IdealExponent::finite(1)
                                                : IdealExponent::finite(0));
    return FinGenIdeal::from_exponents(ctx, std::move(exps));
}

FinGenIdeal upper_ideal(const Ultrafilter& u) { return upper_ideal(u.filter()); }

} // namespace zhat
