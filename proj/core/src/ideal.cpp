#include "zhat/ideal.hpp"

#include <stdexcept>
#include <utility>

namespace zhat {

FinGenIdeal::FinGenIdeal(RingContext ctx, std::vector<ProductElement> generators,
                         std::vector<IdealExponent> exponents)
    : ctx_(std::move(ctx)),
      generators_(std::move(generators)),
      exponents_(std::move(exponents)) {}

FinGenIdeal FinGenIdeal::generated_by(const RingContext& ctx,
                                      std::vector<ProductElement> generators) {
    for (const auto& g : generators)
        if (!(g.context() == ctx)) throw MixedContext("generator context mismatch");

    // Empty generating set spans the zero ideal.
    std::vector<IdealExponent> exps(ctx.size(), IdealExponent::infinity());
    for (const auto& g : generators) {
        for (std::size_t i = 0; i < ctx.size(); ++i) {
            IdealExponent e = IdealExponent::from_valuation(g.component_at(i).valuation());
            if (e < exps[i]) exps[i] = e;
        }
    }
    return FinGenIdeal(ctx, std::move(generators), std::move(exps));
}

FinGenIdeal FinGenIdeal::from_exponents(const RingContext& ctx,
                                        std::vector<IdealExponent> exponents) {
    if (exponents.size() != ctx.size())
        throw std::invalid_argument("exponent count does not match the context");
    for (const auto& e : exponents)
        if (e.is_finite() && e.value() > ctx.precision())
            throw std::invalid_argument("finite ideal exponent exceeds the precision cap");
    FinGenIdeal ideal(ctx, {}, std::move(exponents));
    ideal.generators_.push_back(ideal.canonical_generator());
    return ideal;
}

FinGenIdeal FinGenIdeal::unit_ideal(const RingContext& ctx) {
    return from_exponents(ctx, std::vector<IdealExponent>(ctx.size(), IdealExponent::finite(0)));
}

FinGenIdeal FinGenIdeal::zero_ideal(const RingContext& ctx) {
    return from_exponents(ctx, std::vector<IdealExponent>(ctx.size(), IdealExponent::infinity()));
}

Decision FinGenIdeal::contains_checked(const ProductElement& f) const {
    if (!(f.context() == ctx_)) throw MixedContext();
    bool certain = true;
    for (std::size_t i = 0; i < ctx_.size(); ++i) {
        Valuation v = f.component_at(i).valuation();
        IdealExponent w = exponents_[i];
        if (v.is_exact()) {
            // Exact component valuation: the verdict is sharp either way.
            if (!w.is_finite() || v.value() < w.value()) return Decision{false, true};
        } else {
            // Residue vanishes to all N digits: satisfies every demand, but
            // demands at the cap or above rest on unseen digits.
            if (!w.is_finite() || w.value() >= ctx_.precision()) certain = false;
        }
    }
    return Decision{true, certain};
}

bool FinGenIdeal::is_proper() const {
    for (const auto& e : exponents_)
        if (e > IdealExponent::finite(0)) return true;
    return false;
}

bool FinGenIdeal::subset_of(const FinGenIdeal& o) const {
    if (!(ctx_ == o.ctx_)) throw MixedContext();
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        if (o.exponents_[i] > exponents_[i]) return false;
    return true;
}

ProductElement FinGenIdeal::canonical_generator() const {
    std::vector<mpz_class> residues;
    residues.reserve(ctx_.size());
    for (std::size_t i = 0; i < ctx_.size(); ++i) {
        const IdealExponent& e = exponents_[i];
        if (!e.is_finite()) {
            residues.emplace_back(0);
        } else {
            mpz_class r;
            int k = e.value() < ctx_.precision() ? e.value() : ctx_.precision();
            mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(ctx_.prime_at(i)),
                          static_cast<unsigned long>(k));
            residues.push_back(std::move(r));
        }
    }
    return ProductElement::from_residues(ctx_, residues);
}

} // namespace zhat
