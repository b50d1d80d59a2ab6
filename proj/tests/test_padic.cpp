#include <doctest.h>

#include "zhat/padic.hpp"

using namespace zhat;

namespace {

// Independent oracles, kept deliberately dumb.

long loop_valuation(long n, long p) {
    int v = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

long loop_inverse(long a, long modulus) {
    for (long x = 1; x < modulus; ++x)
        if ((a * x) % modulus == 1) return x;
    return -1;
}

std::vector<long> roots_of_x2_minus_c(long c, long modulus) {
    std::vector<long> out;
    for (long r = 0; r < modulus; ++r)
        if (((r * r) % modulus + modulus) % modulus == c % modulus) out.push_back(r);
    return out;
}

} // namespace

TEST_SUITE_BEGIN("padic");

TEST_CASE("from_integer reduces mod p^N") {
    CHECK(PAdicInt::from_integer(7, 5, 4).residue() == 7);
    CHECK(PAdicInt::from_integer(-1, 3, 2).residue() == 8); // -1 mod 9
    CHECK(PAdicInt::from_integer(0, 2, 8).residue() == 0);
    CHECK_THROWS_AS(PAdicInt::from_integer(1, 6, 3), NonPrimeModulus);
    CHECK_THROWS_AS(PAdicInt::from_integer(1, 2, 0), std::invalid_argument);
}

TEST_CASE("valuation") {
    CHECK(loop_valuation(18, 3) == 2);
    CHECK(PAdicInt::from_integer(18, 3, 6).valuation() == Valuation::exact(2));
    CHECK(PAdicInt::from_integer(1, 7, 4).valuation() == Valuation::exact(0));
    CHECK(PAdicInt::zero(5, 3).valuation().is_at_least_precision());
    // Exact valuations stay strictly below the precision.
    CHECK(PAdicInt::from_integer(8, 2, 4).valuation() == Valuation::exact(3));
    CHECK(PAdicInt::from_integer(16, 2, 4).valuation().is_at_least_precision());
}

TEST_CASE("ring operations") {
    PAdicInt a = PAdicInt::from_integer(13, 3, 3);
    PAdicInt b = PAdicInt::from_integer(14, 3, 3);
    CHECK((a + b).residue() == 0); // 27 mod 27

    PAdicInt c = PAdicInt::from_integer(2, 5, 3);
    PAdicInt d = PAdicInt::from_integer(63, 5, 3);
    CHECK((c * d).residue() == 1); // 126 mod 125

    CHECK(a + PAdicInt::zero(3, 3) == a);
    CHECK((-PAdicInt::zero(3, 3)).residue() == 0);
    CHECK_THROWS_AS(a + c, MixedContext);
    CHECK_THROWS_AS(a + PAdicInt::from_integer(1, 3, 4), MixedContext);
}

TEST_CASE("unit inversion") {
    CHECK(loop_inverse(2, 125) == 63);
    PAdicInt two = PAdicInt::from_integer(2, 5, 3);
    CHECK(two.inverse().residue() == 63);
    CHECK(PAdicInt::one(7, 9).inverse() == PAdicInt::one(7, 9));
    CHECK_THROWS_AS(PAdicInt::from_integer(10, 5, 3).inverse(), NotAUnit);
}

TEST_CASE("hensel lift of x^2 - 2 over Z_7") {
    auto roots = roots_of_x2_minus_c(2, 343);
    REQUIRE(roots == std::vector<long>{108, 235});

    IntPolynomial poly{-2, 0, 1};
    CHECK(hensel_lift(poly, PAdicInt(7, 3, 3)).residue() == 108);
    CHECK(hensel_lift(poly, PAdicInt(7, 3, 4)).residue() == 235);

    // Deep lift squares back to 2 and refines the seed.
    PAdicInt deep = hensel_lift(poly, PAdicInt(7, 24, 3));
    CHECK(deep * deep == PAdicInt::from_integer(2, 7, 24));
    CHECK(deep.residue() % 7 == 3);
}

TEST_CASE("hensel rejections") {
    REQUIRE(roots_of_x2_minus_c(2, 5).empty()); // 2 is a nonresidue mod 5
    IntPolynomial poly{-2, 0, 1};
    for (long a0 = 0; a0 < 5; ++a0)
        CHECK_THROWS_AS(hensel_lift(poly, PAdicInt(5, 3, a0)), NotApproximateRoot);
    CHECK_THROWS_AS(hensel_lift(IntPolynomial{0, 0, 1}, PAdicInt(3, 3, 0)), SingularRoot);
    CHECK_THROWS_AS(hensel_lift(IntPolynomial{0, 0, 0, 1}, PAdicInt(5, 4, 0)), SingularRoot);
}

TEST_CASE("rational embedding") {
    CHECK(loop_inverse(3, 16) == 11);
    PAdicRational third = rational_embed(1, 3, 2, 4);
    CHECK(third.exponent() == 0);
    CHECK(third.unit() == 11);

    CHECK(loop_inverse(5, 16) == 13);
    PAdicRational q = rational_embed(4, 5, 2, 4);
    CHECK(q.exponent() == 2);
    CHECK(q.unit() == 13);

    CHECK(rational_embed(0, 7, 3, 5).is_zero());
    CHECK(rational_embed(1, 8, 2, 4).exponent() == -3);
    // Embedding times the denominator returns the numerator.
    PAdicRational back = q * PAdicRational::from_integral(PAdicInt::from_integer(5, 2, 4));
    CHECK(back == PAdicRational::from_integral(PAdicInt::from_integer(4, 2, 4)));
}

TEST_CASE("rational arithmetic and the zero marker") {
    PAdicRational x = rational_embed(3, 4, 5, 6);
    CHECK(x + (-x) == PAdicRational::zero(5, 6));
    CHECK((x * x.inverse()) == PAdicRational::from_integral(PAdicInt::one(5, 6)));
    CHECK_THROWS_AS(PAdicRational::zero(5, 6).inverse(), NotAUnit);
    CHECK(PAdicRational::zero(5, 6) + x == x);
    CHECK(PAdicRational::zero(5, 6) * x == PAdicRational::zero(5, 6));
}

TEST_CASE("to_integral") {
    CHECK(rational_embed(10, 2, 5, 4).to_integral() == PAdicInt::from_integer(5, 5, 4));
    CHECK_THROWS_AS(rational_embed(1, 5, 5, 4).to_integral(), NotAUnit);
    CHECK(PAdicRational::zero(3, 3).to_integral() == PAdicInt::zero(3, 3));
}

TEST_CASE("window congruence") {
    // A saturated Z_p route and an exact rational route agree in the window.
    PAdicInt big = PAdicInt::from_integer(1 << 20, 2, 16); // 2^20, residue 0 at N=16
    CHECK(big.is_zero());
    PAdicRational exact = PAdicRational::from_parts(20, PAdicInt::one(2, 16));
    CHECK(equal_at_precision(PAdicRational::from_integral(big), exact));
    CHECK_FALSE(equal_at_precision(PAdicRational::from_parts(10, PAdicInt::one(2, 16)),
                                   PAdicRational::zero(2, 16)));
    // Restricting the window widens the tolerance.
    PAdicRational u1 = PAdicRational::from_parts(0, PAdicInt(3, 6, 1));
    PAdicRational u2 = PAdicRational::from_parts(0, PAdicInt(3, 6, 1 + 243)); // differ at digit 5
    CHECK(congruent_at(u1, u2, 5));
    CHECK_FALSE(congruent_at(u1, u2, 6));
}

TEST_SUITE_END();
