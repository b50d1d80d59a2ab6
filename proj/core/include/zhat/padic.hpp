#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "zhat/errors.hpp"
#include "zhat/valuation.hpp"

namespace zhat {

/// Miller-Rabin primality (deterministic over the `long` range).
bool is_prime_number(long p);

/**
 * An element of Z_p known to a fixed absolute precision of N p-adic digits,
 * i.e. a residue in [0, p^N).
 *
 * Every operation is exact modulo p^N.  Values are immutable and freely
 * shareable between threads.
 */
class PAdicInt {
public:
    PAdicInt(long prime, int precision, const mpz_class& value);

    static PAdicInt from_integer(const mpz_class& n, long prime, int precision);
    static PAdicInt zero(long prime, int precision);
    static PAdicInt one(long prime, int precision);

    long prime() const { return prime_; }
    int precision() const { return precision_; }
    const mpz_class& residue() const { return residue_; }
    const mpz_class& modulus() const { return modulus_; }

    bool is_zero() const { return residue_ == 0; }

    /// Largest k with p^k | residue, or AtLeastPrecision when the residue is 0.
    Valuation valuation() const;

    bool is_unit() const;

    /// residue / p^v, the unit cofactor; zero maps to zero.
    PAdicInt unit_part() const;

    /// Multiplicative inverse mod p^N.  Throws NotAUnit when p | residue.
    PAdicInt inverse() const;

    /// Reduction to a coarser precision k <= N.
    PAdicInt truncate(int k) const;

    PAdicInt operator-() const;
    friend PAdicInt operator+(const PAdicInt& a, const PAdicInt& b);
    friend PAdicInt operator-(const PAdicInt& a, const PAdicInt& b);
    friend PAdicInt operator*(const PAdicInt& a, const PAdicInt& b);

    bool operator==(const PAdicInt& o) const {
        return prime_ == o.prime_ && precision_ == o.precision_ && residue_ == o.residue_;
    }

    std::string str() const;

private:
    struct Raw {};
    PAdicInt(Raw, long prime, int precision, mpz_class modulus, mpz_class residue);
    void require_same_context(const PAdicInt& o) const;

    long prime_;
    int precision_;
    mpz_class modulus_; // p^N
    mpz_class residue_; // in [0, p^N)
};

/**
 * An element of Q_p at absolute precision N: value = unit * p^exponent with
 * the unit coprime to p, or a canonical zero marker.  Dividing by p^k shifts
 * the exponent; the stored unit always carries N digits.
 */
class PAdicRational {
public:
    static PAdicRational zero(long prime, int precision);
    static PAdicRational from_parts(long exponent, const PAdicInt& unit);
    static PAdicRational from_integral(const PAdicInt& a);

    long prime() const { return prime_; }
    int precision() const { return precision_; }
    bool is_zero() const { return zero_; }

    /// Exponent of p in the canonical form.  Meaningless for the zero marker.
    long exponent() const { return exponent_; }
    const mpz_class& unit() const { return unit_; }

    bool is_integral() const { return zero_ || exponent_ >= 0; }

    /// Conversion back to Z_p; requires an integral value.
    PAdicInt to_integral() const;

    PAdicRational inverse() const; // NotAUnit on zero
    PAdicRational operator-() const;
    friend PAdicRational operator+(const PAdicRational& a, const PAdicRational& b);
    friend PAdicRational operator-(const PAdicRational& a, const PAdicRational& b);
    friend PAdicRational operator*(const PAdicRational& a, const PAdicRational& b);

    bool operator==(const PAdicRational& o) const;

    std::string str() const;

private:
    PAdicRational(long prime, int precision, bool zero, long exponent, mpz_class unit);
    void require_same_context(const PAdicRational& o) const;
    mpz_class modulus() const;

    long prime_;
    int precision_;
    bool zero_;
    long exponent_;
    mpz_class unit_; // in [0, p^N), coprime to p unless zero_
};

/// Dense integer-coefficient polynomial, low degree first.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coefficients);
    IntPolynomial(std::initializer_list<long> coefficients);

    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    const std::vector<mpz_class>& coefficients() const { return coefficients_; }

    mpz_class eval_mod(const mpz_class& x, const mpz_class& modulus) const;
    IntPolynomial derivative() const;

private:
    std::vector<mpz_class> coefficients_;
};

/**
 * Lift a simple root of `poly` modulo p to a root modulo p^N by Newton
 * iteration with quadratic precision doubling.
 *
 * Requires poly(a0) = 0 (mod p) and poly'(a0) != 0 (mod p); throws
 * NotApproximateRoot / SingularRoot otherwise.  The result r satisfies
 * poly(r) = 0 (mod p^N) and r = a0 (mod p).
 */
PAdicInt hensel_lift(const IntPolynomial& poly, const PAdicInt& approximate_root);

/// Diagonal embedding of num/den into Q_p at precision N.
PAdicRational rational_embed(const mpz_class& num, const mpz_class& den, long prime,
                             int precision);

/**
 * Congruence in the N-digit window anchored at the smaller exponent (and at
 * 0 for integral values).  Canonical forms track exponents exactly, so two
 * routes to the same value can disagree above the window whenever an
 * intermediate Z_p step saturated at p^N; this is the equality those digits
 * actually support.
 */
bool equal_at_precision(const PAdicRational& a, const PAdicRational& b);

/// Window congruence restricted to the first `digits` positions; routes that
/// strip a valuation v before a reduction only support N - v of them.
bool congruent_at(const PAdicRational& a, const PAdicRational& b, int digits);

} // namespace zhat
