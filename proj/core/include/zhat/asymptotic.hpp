#pragma once

#include <compare>
#include <string>
#include <vector>

#include "zhat/errors.hpp"

namespace zhat {

/**
 * A decidable fragment of the nonstandard value semigroup: sequences that are
 * eventually polynomial, stored as integer polynomials in n with positive
 * leading coefficient (or the zero polynomial).  Eventual dominance is a
 * total order on this family, independent of which nonprincipal ultrafilter
 * one has in mind, so every comparison made here is ultrafilter-free.
 */
class AsymptoticNat {
public:
    AsymptoticNat() = default; // zero
    explicit AsymptoticNat(std::vector<long long> coefficients); // low degree first

    static AsymptoticNat constant(long long c);
    static AsymptoticNat monomial(int degree, long long coefficient);

    bool is_zero() const { return coefficients_.empty(); }
    /// Degree; -1 for zero.
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    const std::vector<long long>& coefficients() const { return coefficients_; }
    long long eval(long long n) const;

    friend AsymptoticNat operator+(const AsymptoticNat& a, const AsymptoticNat& b);
    /// m-fold sum, m >= 1.
    AsymptoticNat times(long long m) const;

    /// Eventual dominance: sign of the leading coefficient of the difference.
    std::strong_ordering operator<=>(const AsymptoticNat& o) const;
    bool operator==(const AsymptoticNat& o) const { return coefficients_ == o.coefficients_; }

    std::string str() const;

private:
    std::vector<long long> coefficients_;
};

/// Archimedean class of a nonzero element: its degree.  Two elements are
/// equivalent iff each is below a standard multiple of the other.
int archimedean_class(const AsymptoticNat& x); // throws ZeroHasNoClass
bool same_archimedean_class(const AsymptoticNat& x, const AsymptoticNat& y);

/**
 * A convex subsemigroup of the fragment: one of the four realizable shapes.
 * Zero and Standard mirror the two smallest segments, DegreeAtMost(d) has a
 * top archimedean class, All has none inside the fragment.
 */
class ConvexSubsemigroup {
public:
    enum class Kind { Zero, Standard, DegreeAtMost, All };

    static ConvexSubsemigroup zero() { return {Kind::Zero, 0}; }
    static ConvexSubsemigroup standard() { return {Kind::Standard, 0}; }
    static ConvexSubsemigroup degree_at_most(int d);
    static ConvexSubsemigroup all() { return {Kind::All, 0}; }

    Kind kind() const { return kind_; }
    /// Degree bound; meaningful for DegreeAtMost only.
    int bound() const { return bound_; }

    bool contains(const AsymptoticNat& x) const;
    bool subset_of(const ConvexSubsemigroup& o) const;

    bool operator==(const ConvexSubsemigroup& o) const {
        return kind_ == o.kind_ && (kind_ != Kind::DegreeAtMost || bound_ == o.bound_);
    }

    std::string str() const;

private:
    ConvexSubsemigroup(Kind kind, int bound) : kind_(kind), bound_(bound) {}
    Kind kind_;
    int bound_;
};

/// Smallest convex subsemigroup containing x: {y : y <= m x for some m}.
ConvexSubsemigroup least_convex_containing(const AsymptoticNat& x);

/**
 * The prime attached to a convex subsemigroup: elements whose valuation
 * strictly dominates all of Delta.  In the fragment's total order that is
 * exactly "valuation outside Delta", plus the zero element (valuation
 * infinity), which belongs to every such prime.
 */
class SymbolicPrime {
public:
    explicit SymbolicPrime(ConvexSubsemigroup delta) : delta_(delta) {}

    const ConvexSubsemigroup& delta() const { return delta_; }

    bool contains_valuation(const AsymptoticNat& v) const { return !delta_.contains(v); }
    bool contains_infinite_valuation() const { return true; }

    bool operator==(const SymbolicPrime& o) const { return delta_ == o.delta_; }

private:
    ConvexSubsemigroup delta_;
};

/// Delta -> P_Delta.
SymbolicPrime prime_of(const ConvexSubsemigroup& delta);

/**
 * P -> Delta_P = {gamma : gamma < v(f) for all f in P}, recovered from the
 * prime's membership predicate by probing the least degree it contains.
 */
ConvexSubsemigroup convex_of(const SymbolicPrime& p);

} // namespace zhat
