#include "zhat/asymptotic.hpp"

#include <stdexcept>
#include <utility>

namespace zhat {

AsymptoticNat::AsymptoticNat(std::vector<long long> coefficients)
    : coefficients_(std::move(coefficients)) {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
    if (!coefficients_.empty() && coefficients_.back() < 0)
        throw std::invalid_argument("leading coefficient must be positive");
}

AsymptoticNat AsymptoticNat::constant(long long c) {
    if (c < 0) throw std::invalid_argument("constants must be nonnegative");
    return c == 0 ? AsymptoticNat() : AsymptoticNat({c});
}

AsymptoticNat AsymptoticNat::monomial(int degree, long long coefficient) {
    if (degree < 0 || coefficient <= 0) throw std::invalid_argument("bad monomial");
    std::vector<long long> coeffs(static_cast<std::size_t>(degree) + 1, 0);
    coeffs.back() = coefficient;
    return AsymptoticNat(std::move(coeffs));
}

long long AsymptoticNat::eval(long long n) const {
    long long acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
        acc = acc * n + *it;
    return acc;
}

AsymptoticNat operator+(const AsymptoticNat& a, const AsymptoticNat& b) {
    std::vector<long long> out(std::max(a.coefficients_.size(), b.coefficients_.size()), 0);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) out[i] += a.coefficients_[i];
    for (std::size_t i = 0; i < b.coefficients_.size(); ++i) out[i] += b.coefficients_[i];
    return AsymptoticNat(std::move(out));
}

AsymptoticNat AsymptoticNat::times(long long m) const {
    if (m < 1) throw std::invalid_argument("multiplier must be a positive integer");
    std::vector<long long> out = coefficients_;
    for (auto& c : out) c *= m;
    return AsymptoticNat(std::move(out));
}

std::strong_ordering AsymptoticNat::operator<=>(const AsymptoticNat& o) const {
    // Leading nonzero coefficient of the difference decides dominance.
    std::size_t n = std::max(coefficients_.size(), o.coefficients_.size());
    for (std::size_t i = n; i-- > 0;) {
        long long a = i < coefficients_.size() ? coefficients_[i] : 0;
        long long b = i < o.coefficients_.size() ? o.coefficients_[i] : 0;
        if (a != b) return a <=> b;
    }
    return std::strong_ordering::equal;
}

std::string AsymptoticNat::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coefficients_.size(); i-- > 0;) {
        if (coefficients_[i] == 0) continue;
        if (!out.empty()) out += coefficients_[i] > 0 ? " + " : " - ";
        long long c = !out.empty() && coefficients_[i] < 0 ? -coefficients_[i]
                                                           : coefficients_[i];
        if (i == 0 || c != 1) out += std::to_string(c);
        if (i >= 1) out += "n";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

int archimedean_class(const AsymptoticNat& x) {
    if (x.is_zero()) throw ZeroHasNoClass();
    return x.degree();
}

bool same_archimedean_class(const AsymptoticNat& x, const AsymptoticNat& y) {
    return archimedean_class(x) == archimedean_class(y);
}

ConvexSubsemigroup ConvexSubsemigroup::degree_at_most(int d) {
    if (d < 1) throw std::invalid_argument("degree bound must be >= 1");
    return {Kind::DegreeAtMost, d};
}

bool ConvexSubsemigroup::contains(const AsymptoticNat& x) const {
    switch (kind_) {
        case Kind::Zero: return x.is_zero();
        case Kind::Standard: return x.degree() <= 0;
        case Kind::DegreeAtMost: return x.degree() <= bound_;
        case Kind::All: return true;
    }
    return false;
}

namespace {
int segment_rank(const ConvexSubsemigroup& d) {
    switch (d.kind()) {
        case ConvexSubsemigroup::Kind::Zero: return 0;
        case ConvexSubsemigroup::Kind::Standard: return 1;
        case ConvexSubsemigroup::Kind::DegreeAtMost: return 1 + d.bound();
        case ConvexSubsemigroup::Kind::All: return 1 << 30;
    }
    return 0;
}
} // namespace

bool ConvexSubsemigroup::subset_of(const ConvexSubsemigroup& o) const {
    return segment_rank(*this) <= segment_rank(o);
}

std::string ConvexSubsemigroup::str() const {
    switch (kind_) {
        case Kind::Zero: return "zero";
        case Kind::Standard: return "standard";
        case Kind::DegreeAtMost: return "degree-at-most-" + std::to_string(bound_);
        case Kind::All: return "all";
    }
    return "zero";
}

ConvexSubsemigroup least_convex_containing(const AsymptoticNat& x) {
    if (x.is_zero()) return ConvexSubsemigroup::zero();
    int d = x.degree();
    return d == 0 ? ConvexSubsemigroup::standard() : ConvexSubsemigroup::degree_at_most(d);
}

SymbolicPrime prime_of(const ConvexSubsemigroup& delta) { return SymbolicPrime(delta); }

ConvexSubsemigroup convex_of(const SymbolicPrime& p) {
    // Probe for the least degree whose monomials the prime contains; Delta_P
    // is everything strictly below that degree.
    int probe_limit = 2;
    if (p.delta().kind() == ConvexSubsemigroup::Kind::DegreeAtMost)
        probe_limit = p.delta().bound() + 2;
    for (int d = 0; d <= probe_limit; ++d) {
        if (!p.contains_valuation(AsymptoticNat::monomial(d, 1) + AsymptoticNat::constant(1)))
            continue;
        if (d == 0) return ConvexSubsemigroup::zero();
        if (d == 1) return ConvexSubsemigroup::standard();
        return ConvexSubsemigroup::degree_at_most(d - 1);
    }
    return ConvexSubsemigroup::all(); // only the zero element lies in P
}

} // namespace zhat
