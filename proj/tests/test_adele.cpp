#include <doctest.h>

#include "zhat/adele.hpp"

using namespace zhat;

namespace {
ProductElement elem(const RingContext& ctx, std::vector<long> residues) {
    std::vector<mpz_class> rs(residues.begin(), residues.end());
    return ProductElement::from_residues(ctx, rs);
}
} // namespace

TEST_SUITE_BEGIN("adele");

TEST_CASE("fractions over the diagonal integers") {
    RingContext ctx({2, 3}, 4);
    AdeleElement a = AdeleElement::from_fraction(elem(ctx, {1, 1}), 6);
    CHECK(a.component(2).exponent() == -1);
    CHECK(a.component(3).exponent() == -1);
    CHECK(a.component(2).unit() == 11); // 3^-1 mod 16
    CHECK(a.component(3).unit() == 41); // 2^-1 mod 81
    CHECK(a.integrality_locus().empty());

    AdeleElement b = AdeleElement::from_fraction(elem(ctx, {4, 9}), 6);
    CHECK(b.component(2).exponent() == 1);
    CHECK(b.component(3).exponent() == 1);
    CHECK(b.is_integral());

    AdeleElement embedded = AdeleElement::embed(elem(ctx, {4, 9}));
    CHECK(embedded.is_integral());
    CHECK(embedded.component(2) ==
          PAdicRational::from_integral(PAdicInt::from_integer(4, 2, 4)));

    CHECK_THROWS_AS(AdeleElement::from_fraction(elem(ctx, {1, 1}), 0),
                    std::invalid_argument);
}

TEST_CASE("spectrum of the adele ring") {
    RingContext ctx({2, 3, 5});
    std::vector<AdelePrime> spec = spec_adeles(ctx);
    CHECK(spec.size() == 3);

    CHECK_FALSE(extend_to_adeles(PrimeIdeal(ctx, 3, PrimeLevel::Maximal)).has_value());
    auto q3 = extend_to_adeles(PrimeIdeal(ctx, 3, PrimeLevel::Minimal));
    REQUIRE(q3.has_value());
    CHECK(q3->prime() == 3);
    CHECK(q3->contraction() == PrimeIdeal(ctx, 3, PrimeLevel::Minimal));
}

TEST_CASE("quotient and localization are the component field") {
    RingContext ctx({2, 3, 5});
    AdelePrime q(ctx, 3);
    AdeleComponentField field = adele_quotient(q);

    AdeleElement f = AdeleElement::from_fraction(elem(ctx, {1, 7, 2}), 3);
    CHECK(field.project(f) ==
          rational_embed(7, 3, 3, ctx.precision())); // the middle coordinate
    CHECK_FALSE(field.in_kernel(f));

    std::vector<PAdicRational> comps{
        PAdicRational::from_integral(PAdicInt::one(2, ctx.precision())),
        PAdicRational::zero(3, ctx.precision()),
        PAdicRational::from_integral(PAdicInt::one(5, ctx.precision()))};
    AdeleElement in_kernel(ctx, comps);
    CHECK(field.in_kernel(in_kernel));
    CHECK(q.contains(in_kernel));

    AdeleComponentField loc = adele_localize(q);
    CHECK(loc.is_localization());
    CHECK(loc.project(f) == field.project(f));
    CHECK_THROWS_AS(loc.map_fraction(f, in_kernel), DenominatorInPrime);
}

TEST_CASE("units and ring operations") {
    RingContext ctx({2, 3, 5});
    for (long n = 1; n <= 100; ++n) {
        AdeleElement a = AdeleElement::diagonal(ctx, n, 1);
        CHECK(a.is_invertible());
        CHECK(a * a.inverse() == AdeleElement::one(ctx));
    }
    AdeleElement half = AdeleElement::diagonal(ctx, 1, 2);
    AdeleElement two = AdeleElement::diagonal(ctx, 2, 1);
    CHECK(half * two == AdeleElement::one(ctx));
    CHECK(half + (-half) == AdeleElement::diagonal(ctx, 0, 1));
    CHECK_FALSE(AdeleElement::diagonal(ctx, 0, 1).is_invertible());
}

TEST_SUITE_END();
