#pragma once

#include <compare>
#include <string>
#include <vector>

#include "zhat/product.hpp"

namespace zhat {

/**
 * One slot of an ideal's valuation profile: the least component valuation
 * demanded at a prime.  Finite values run from 0 up to and including the
 * working precision N (the formal cap), with Infinity above them all.
 */
class IdealExponent {
public:
    static IdealExponent finite(int k) { return IdealExponent(k); }
    static IdealExponent infinity() { return IdealExponent(kInf); }

    static IdealExponent from_valuation(Valuation v) {
        return v.is_exact() ? finite(v.value()) : infinity();
    }

    bool is_finite() const { return v_ != kInf; }
    int value() const { return v_; }

    friend std::strong_ordering operator<=>(IdealExponent a, IdealExponent b) {
        if (a.v_ == kInf && b.v_ == kInf) return std::strong_ordering::equal;
        if (a.v_ == kInf) return std::strong_ordering::greater;
        if (b.v_ == kInf) return std::strong_ordering::less;
        return a.v_ <=> b.v_;
    }
    friend bool operator==(IdealExponent a, IdealExponent b) { return a.v_ == b.v_; }

    std::string str() const { return is_finite() ? std::to_string(v_) : "inf"; }

private:
    static constexpr int kInf = -1;
    explicit IdealExponent(int v) : v_(v) {}
    int v_;
};

/// Boolean verdict plus whether it rests only on digits within precision.
struct Decision {
    bool value;
    bool certain;
};

/**
 * Finitely generated ideal of prod Z_p in valuation-vector normal form:
 * w(p) = min over generators of the component valuation at p, and
 * f is a member iff v(f(p)) >= w(p) for every p (in the capped order).
 *
 * Two ideals with equal profiles are the same ideal.
 */
class FinGenIdeal {
public:
    static FinGenIdeal generated_by(const RingContext& ctx,
                                    std::vector<ProductElement> generators);
    static FinGenIdeal from_exponents(const RingContext& ctx,
                                      std::vector<IdealExponent> exponents);
    static FinGenIdeal unit_ideal(const RingContext& ctx);
    static FinGenIdeal zero_ideal(const RingContext& ctx);

    const RingContext& context() const { return ctx_; }
    const std::vector<ProductElement>& generators() const { return generators_; }
    const std::vector<IdealExponent>& exponents() const { return exponents_; }
    IdealExponent exponent_at(long p) const { return exponents_[ctx_.index_of(p)]; }

    bool contains(const ProductElement& f) const { return contains_checked(f).value; }
    Decision contains_checked(const ProductElement& f) const;

    bool is_proper() const;

    /// Formal containment of normal forms: this subset of `o` iff w_o <= w pointwise.
    bool subset_of(const FinGenIdeal& o) const;

    /// Single element generating the same profile: p^min(w(p), N) per component.
    ProductElement canonical_generator() const;

    bool operator==(const FinGenIdeal& o) const {
        return ctx_ == o.ctx_ && exponents_ == o.exponents_;
    }

private:
    FinGenIdeal(RingContext ctx, std::vector<ProductElement> generators,
                std::vector<IdealExponent> exponents);

    RingContext ctx_;
    std::vector<ProductElement> generators_;
    std::vector<IdealExponent> exponents_;
};

} // namespace zhat
