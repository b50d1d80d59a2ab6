#include "zhat/padic.hpp"

#include <stdexcept>
#include <utility>

namespace zhat {

bool is_prime_number(long p) {
    if (p < 2) return false;
    // Constructors revalidate their modulus, so remember the last hit.
    static thread_local long last_verified = 0;
    if (p == last_verified) return true;
    mpz_class z(p);
    if (mpz_probab_prime_p(z.get_mpz_t(), 32) == 0) return false;
    last_verified = p;
    return true;
}

namespace {

mpz_class power_of(long prime, int precision) {
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(prime),
                  static_cast<unsigned long>(precision));
    return m;
}

mpz_class reduce(const mpz_class& v, const mpz_class& modulus) {
    mpz_class r = v % modulus;
    if (r < 0) r += modulus;
    return r;
}

// Exponent of p in n (n != 0); exact over the integers.
long integer_valuation(mpz_class n, long prime) {
    mpz_class out;
    return static_cast<long>(
        mpz_remove(out.get_mpz_t(), n.get_mpz_t(), mpz_class(prime).get_mpz_t()));
}

} // namespace

PAdicInt::PAdicInt(long prime, int precision, const mpz_class& value)
    : prime_(prime), precision_(precision) {
    if (!is_prime_number(prime)) throw NonPrimeModulus(prime);
    if (precision < 1) throw std::invalid_argument("precision must be >= 1");
    modulus_ = power_of(prime, precision);
    residue_ = reduce(value, modulus_);
}

PAdicInt::PAdicInt(Raw, long prime, int precision, mpz_class modulus, mpz_class residue)
    : prime_(prime),
      precision_(precision),
      modulus_(std::move(modulus)),
      residue_(std::move(residue)) {}

PAdicInt PAdicInt::from_integer(const mpz_class& n, long prime, int precision) {
    return PAdicInt(prime, precision, n);
}

PAdicInt PAdicInt::zero(long prime, int precision) {
    return PAdicInt(prime, precision, 0);
}

PAdicInt PAdicInt::one(long prime, int precision) {
    return PAdicInt(prime, precision, 1);
}

Valuation PAdicInt::valuation() const {
    if (residue_ == 0) return Valuation::at_least_precision();
    return Valuation::exact(static_cast<int>(integer_valuation(residue_, prime_)));
}

bool PAdicInt::is_unit() const {
    return residue_ % prime_ != 0;
}

PAdicInt PAdicInt::unit_part() const {
    if (residue_ == 0) return *this;
    mpz_class u;
    mpz_remove(u.get_mpz_t(), residue_.get_mpz_t(), mpz_class(prime_).get_mpz_t());
    return PAdicInt(Raw{}, prime_, precision_, modulus_, std::move(u));
}

PAdicInt PAdicInt::inverse() const {
    if (!is_unit()) throw NotAUnit();
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), residue_.get_mpz_t(), modulus_.get_mpz_t());
    return PAdicInt(Raw{}, prime_, precision_, modulus_, std::move(inv));
}

PAdicInt PAdicInt::truncate(int k) const {
    if (k < 1 || k > precision_) throw std::invalid_argument("bad truncation precision");
    return PAdicInt(prime_, k, residue_);
}

void PAdicInt::require_same_context(const PAdicInt& o) const {
    if (prime_ != o.prime_ || precision_ != o.precision_) throw MixedContext();
}

PAdicInt PAdicInt::operator-() const {
    mpz_class r = residue_ == 0 ? mpz_class(0) : mpz_class(modulus_ - residue_);
    return PAdicInt(Raw{}, prime_, precision_, modulus_, std::move(r));
}

PAdicInt operator+(const PAdicInt& a, const PAdicInt& b) {
    a.require_same_context(b);
    return PAdicInt(PAdicInt::Raw{}, a.prime_, a.precision_, a.modulus_,
                    reduce(a.residue_ + b.residue_, a.modulus_));
}

PAdicInt operator-(const PAdicInt& a, const PAdicInt& b) {
    a.require_same_context(b);
    return PAdicInt(PAdicInt::Raw{}, a.prime_, a.precision_, a.modulus_,
                    reduce(a.residue_ - b.residue_, a.modulus_));
}

PAdicInt operator*(const PAdicInt& a, const PAdicInt& b) {
    a.require_same_context(b);
    return PAdicInt(PAdicInt::Raw{}, a.prime_, a.precision_, a.modulus_,
                    reduce(a.residue_ * b.residue_, a.modulus_));
}

std::string PAdicInt::str() const {
    return residue_.get_str() + " (mod " + std::to_string(prime_) + "^" +
           std::to_string(precision_) + ")";
}

// ---------------------------------------------------------------------------

PAdicRational::PAdicRational(long prime, int precision, bool zero, long exponent,
                             mpz_class unit)
    : prime_(prime),
      precision_(precision),
      zero_(zero),
      exponent_(exponent),
      unit_(std::move(unit)) {}

mpz_class PAdicRational::modulus() const { return power_of(prime_, precision_); }

PAdicRational PAdicRational::zero(long prime, int precision) {
    if (!is_prime_number(prime)) throw NonPrimeModulus(prime);
    if (precision < 1) throw std::invalid_argument("precision must be >= 1");
    return PAdicRational(prime, precision, true, 0, mpz_class(0));
}

PAdicRational PAdicRational::from_parts(long exponent, const PAdicInt& unit) {
    if (unit.is_zero()) return zero(unit.prime(), unit.precision());
    if (!unit.is_unit())
        throw std::invalid_argument("canonical form requires a unit cofactor");
    return PAdicRational(unit.prime(), unit.precision(), false, exponent, unit.residue());
}

PAdicRational PAdicRational::from_integral(const PAdicInt& a) {
    if (a.is_zero()) return zero(a.prime(), a.precision());
    return PAdicRational(a.prime(), a.precision(), false,
                         static_cast<long>(a.valuation().value()),
                         a.unit_part().residue());
}

PAdicInt PAdicRational::to_integral() const {
    if (zero_) return PAdicInt::zero(prime_, precision_);
    if (exponent_ < 0) throw NotAUnit("value has a pole; not in Z_p");
    mpz_class shift = power_of(prime_, static_cast<int>(
        exponent_ < precision_ ? exponent_ : precision_));
    return PAdicInt(prime_, precision_, unit_ * shift);
}

void PAdicRational::require_same_context(const PAdicRational& o) const {
    if (prime_ != o.prime_ || precision_ != o.precision_) throw MixedContext();
}

PAdicRational PAdicRational::inverse() const {
    if (zero_) throw NotAUnit("zero is not invertible");
    mpz_class m = modulus();
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), m.get_mpz_t());
    return PAdicRational(prime_, precision_, false, -exponent_, std::move(inv));
}

PAdicRational PAdicRational::operator-() const {
    if (zero_) return *this;
    return PAdicRational(prime_, precision_, false, exponent_, modulus() - unit_);
}

PAdicRational operator*(const PAdicRational& a, const PAdicRational& b) {
    a.require_same_context(b);
    if (a.zero_ || b.zero_) return PAdicRational::zero(a.prime_, a.precision_);
    mpz_class m = a.modulus();
    return PAdicRational(a.prime_, a.precision_, false, a.exponent_ + b.exponent_,
                         reduce(a.unit_ * b.unit_, m));
}

PAdicRational operator+(const PAdicRational& a, const PAdicRational& b) {
    a.require_same_context(b);
    if (a.zero_) return b;
    if (b.zero_) return a;
    const PAdicRational& lo = a.exponent_ <= b.exponent_ ? a : b;
    const PAdicRational& hi = a.exponent_ <= b.exponent_ ? b : a;
    mpz_class m = a.modulus();
    long gap = hi.exponent_ - lo.exponent_;
    mpz_class shifted = gap >= a.precision_
                            ? mpz_class(0)
                            : reduce(hi.unit_ * power_of(a.prime_, static_cast<int>(gap)), m);
    mpz_class s = reduce(lo.unit_ + shifted, m);
    if (s == 0) return PAdicRational::zero(a.prime_, a.precision_);
    long v = integer_valuation(s, a.prime_);
    mpz_class u;
    mpz_remove(u.get_mpz_t(), s.get_mpz_t(), mpz_class(a.prime_).get_mpz_t());
    return PAdicRational(a.prime_, a.precision_, false, lo.exponent_ + v, std::move(u));
}

PAdicRational operator-(const PAdicRational& a, const PAdicRational& b) {
    return a + (-b);
}

bool PAdicRational::operator==(const PAdicRational& o) const {
    if (prime_ != o.prime_ || precision_ != o.precision_) return false;
    if (zero_ || o.zero_) return zero_ == o.zero_;
    return exponent_ == o.exponent_ && unit_ == o.unit_;
}

std::string PAdicRational::str() const {
    if (zero_) return "0";
    return unit_.get_str() + "*" + std::to_string(prime_) + "^" + std::to_string(exponent_);
}

// ---------------------------------------------------------------------------

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients)
    : coefficients_(std::move(coefficients)) {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
    for (long c : coefficients) coefficients_.emplace_back(c);
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

mpz_class IntPolynomial::eval_mod(const mpz_class& x, const mpz_class& modulus) const {
    mpz_class acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
        acc = reduce(acc * x + *it, modulus);
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    std::vector<mpz_class> d;
    for (std::size_t i = 1; i < coefficients_.size(); ++i)
        d.push_back(coefficients_[i] * static_cast<long>(i));
    return IntPolynomial(std::move(d));
}

PAdicInt hensel_lift(const IntPolynomial& poly, const PAdicInt& approximate_root) {
    const long p = approximate_root.prime();
    const int n = approximate_root.precision();
    const mpz_class prime(p);

    mpz_class x = approximate_root.residue() % prime;
    if (poly.eval_mod(x, prime) != 0) throw NotApproximateRoot();
    IntPolynomial dpoly = poly.derivative();
    if (dpoly.eval_mod(x, prime) == 0) throw SingularRoot();

    int digits = 1;
    while (digits < n) {
        int next = digits * 2 < n ? digits * 2 : n;
        mpz_class m = power_of(p, next);
        mpz_class fx = poly.eval_mod(x, m);
        mpz_class dfx = dpoly.eval_mod(x, m);
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), dfx.get_mpz_t(), m.get_mpz_t());
        x = reduce(x - fx * inv, m);
        digits = next;
    }
    return PAdicInt(p, n, x);
}

bool congruent_at(const PAdicRational& a, const PAdicRational& b, int digits) {
    if (a.prime() != b.prime() || a.precision() != b.precision()) throw MixedContext();
    if (digits < 1) return true;
    long anchor = 0;
    if (!a.is_zero() && a.exponent() < anchor) anchor = a.exponent();
    if (!b.is_zero() && b.exponent() < anchor) anchor = b.exponent();
    mpz_class m = power_of(a.prime(), digits);
    auto window = [&](const PAdicRational& x) -> mpz_class {
        if (x.is_zero()) return 0;
        long shift = x.exponent() - anchor;
        if (shift >= digits) return 0;
        return reduce(x.unit() * power_of(a.prime(), static_cast<int>(shift)), m);
    };
    return window(a) == window(b);
}

bool equal_at_precision(const PAdicRational& a, const PAdicRational& b) {
    return congruent_at(a, b, a.precision());
}

PAdicRational rational_embed(const mpz_class& num, const mpz_class& den, long prime,
                             int precision) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (num == 0) return PAdicRational::zero(prime, precision);

    mpz_class n = num, d = den;
    if (d < 0) { d = -d; n = -n; }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    n /= g;
    d /= g;

    long vn = integer_valuation(n, prime);
    long vd = integer_valuation(d, prime);
    mpz_class nf, df;
    mpz_remove(nf.get_mpz_t(), n.get_mpz_t(), mpz_class(prime).get_mpz_t());
    mpz_remove(df.get_mpz_t(), d.get_mpz_t(), mpz_class(prime).get_mpz_t());

    mpz_class m = power_of(prime, precision);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), reduce(df, m).get_mpz_t(), m.get_mpz_t());
    mpz_class unit = reduce(nf * inv, m);
    return PAdicRational::from_parts(vn - vd, PAdicInt(prime, precision, unit));
}

} // namespace zhat
