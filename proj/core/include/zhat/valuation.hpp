#pragma once

#include <cassert>
#include <compare>
#include <string>

namespace zhat {

/**
 * Valuation of a p-adic integer known to N digits.
 *
 * Either an exact power k with 0 <= k < N, or the marker AtLeastPrecision:
 * a residue that is zero to all N digits cannot be told apart from p^N times
 * a unit, so its valuation is only known to be >= N.  The marker sits above
 * every exact value in the working order, and two markers compare equal at
 * the working precision.
 */
class Valuation {
public:
    static Valuation exact(int k) {
        assert(k >= 0);
        return Valuation(k);
    }
    static Valuation at_least_precision() { return Valuation(kAtLeast); }

    bool is_exact() const { return v_ != kAtLeast; }
    bool is_at_least_precision() const { return v_ == kAtLeast; }

    int value() const {
        assert(is_exact());
        return v_;
    }

    /// Exact value, or `cap` for the AtLeastPrecision marker.
    int value_or(int cap) const { return is_exact() ? v_ : cap; }

    friend std::strong_ordering operator<=>(Valuation a, Valuation b) {
        if (a.v_ == kAtLeast && b.v_ == kAtLeast) return std::strong_ordering::equal;
        if (a.v_ == kAtLeast) return std::strong_ordering::greater;
        if (b.v_ == kAtLeast) return std::strong_ordering::less;
        return a.v_ <=> b.v_;
    }
    friend bool operator==(Valuation a, Valuation b) { return a.v_ == b.v_; }

    /// Semigroup sum v(a) + v(b), saturating at the precision cap.
    static Valuation plus(Valuation a, Valuation b, int precision) {
        if (!a.is_exact() || !b.is_exact()) return at_least_precision();
        int s = a.value() + b.value();
        return s >= precision ? at_least_precision() : exact(s);
    }

    std::string str() const { return is_exact() ? std::to_string(v_) : ">=N"; }

private:
    static constexpr int kAtLeast = -1;
    explicit Valuation(int v) : v_(v) {}
    int v_;
};

} // namespace zhat
