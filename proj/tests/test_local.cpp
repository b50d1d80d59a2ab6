#include <doctest.h>

#include "zhat/localization.hpp"
#include "zhat/quotient.hpp"

using namespace zhat;

namespace {
ProductElement elem(const RingContext& ctx, std::vector<long> residues) {
    std::vector<mpz_class> rs(residues.begin(), residues.end());
    return ProductElement::from_residues(ctx, rs);
}
} // namespace

TEST_SUITE_BEGIN("local");

TEST_CASE("quotient by a maximal prime is the residue field") {
    RingContext ctx({2, 3, 5});
    QuotientRing ring = quotient(PrimeIdeal(ctx, 3, PrimeLevel::Maximal));
    CHECK(ring.is_residue_field());
    CHECK(ring.kind_name() == "residue-field");
    CHECK(ring.project_residue(elem(ctx, {0, 1, 0})).value() == 1);
    CHECK(ring.project_residue(elem(ctx, {0, 3, 0})).value() == 0);
    CHECK(ring.project_residue(elem(ctx, {7, 7, 7})).value() == 1);
    CHECK(ring.in_kernel(elem(ctx, {1, 6, 1})));
    CHECK_FALSE(ring.in_kernel(elem(ctx, {3, 1, 3})));
}

TEST_CASE("quotient by a minimal prime is the component ring") {
    RingContext ctx({2, 3, 5});
    QuotientRing ring = quotient(PrimeIdeal(ctx, 3, PrimeLevel::Minimal));
    CHECK_FALSE(ring.is_residue_field());
    CHECK(ring.project_component(elem(ctx, {0, 7, 0})) == PAdicInt::from_integer(7, 3, 24));
    CHECK(ring.in_kernel(elem(ctx, {5, 0, 5})));
    CHECK_THROWS_AS(ring.project_residue(elem(ctx, {1, 1, 1})), std::logic_error);
}

TEST_CASE("localize at a minimal prime gives the component field") {
    RingContext ctx({2, 3});
    LocalizedRing ring = localize(PrimeIdeal(ctx, 2, PrimeLevel::Minimal));
    CHECK(ring.is_field());
    PAdicRational image = ring.map_fraction(elem(ctx, {2, 1}), elem(ctx, {4, 1}));
    CHECK(image.exponent() == -1);
    CHECK(image.unit() == 1);
    CHECK_THROWS_AS(ring.map_fraction(ProductElement::one(ctx), elem(ctx, {0, 1})),
                    DenominatorInPrime);
}

TEST_CASE("localize at a maximal prime gives the component ring") {
    RingContext ctx({2, 3, 5});
    LocalizedRing ring = localize(PrimeIdeal(ctx, 3, PrimeLevel::Maximal));
    CHECK_FALSE(ring.is_field());
    PAdicRational image = ring.map_fraction(elem(ctx, {1, 2, 1}), elem(ctx, {1, 5, 1}));
    PAdicInt expected =
        PAdicInt::from_integer(2, 3, 24) * PAdicInt::from_integer(5, 3, 24).inverse();
    CHECK(image == PAdicRational::from_integral(expected));
    CHECK(image.is_integral());
    // Denominators divisible by p are rejected in the component ring.
    CHECK_THROWS_AS(ring.map_fraction(ProductElement::one(ctx), elem(ctx, {1, 3, 1})),
                    DenominatorInPrime);
}

TEST_CASE("localization kernel is the chain's minimal prime") {
    RingContext ctx({2, 3, 5});
    FinGenIdeal k1 = localization_kernel(PrimeIdeal(ctx, 3, PrimeLevel::Maximal));
    FinGenIdeal k2 = localization_kernel(PrimeIdeal(ctx, 3, PrimeLevel::Minimal));
    CHECK(k1 == k2);
    CHECK(k1 == PrimeIdeal(ctx, 3, PrimeLevel::Minimal).ideal());
    CHECK_FALSE(k1.contains(Idempotent(ctx, {3}).element()));
    CHECK(k1.contains(Idempotent(ctx, {2, 5}).element()));
}

TEST_CASE("henselian witnesses in local rings") {
    RingContext ctx({2, 7});
    IntPolynomial poly{-2, 0, 1};
    PAdicInt seed(7, ctx.precision(), 3);

    PAdicInt w = localize(PrimeIdeal(ctx, 7, PrimeLevel::Maximal)).lift_root(poly, seed);
    CHECK(w * w == PAdicInt::from_integer(2, 7, ctx.precision()));
    CHECK(w.truncate(3).residue() == 108);

    CHECK(quotient(PrimeIdeal(ctx, 7, PrimeLevel::Minimal)).lift_root(poly, seed) == w);

    LocalizedRing field = localize(PrimeIdeal(ctx, 7, PrimeLevel::Minimal));
    CHECK(field.lift_root(poly, w) == w);
    CHECK_THROWS_AS(field.lift_root(poly, seed), NotApproximateRoot);
}

TEST_SUITE_END();
