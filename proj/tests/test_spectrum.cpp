#include <doctest.h>

#include "zhat/filters.hpp"
#include "zhat/spectrum.hpp"

using namespace zhat;

namespace {
RingContext ctx235(int precision = 24) { return RingContext({2, 3, 5}, precision); }

ProductElement elem(const RingContext& ctx, std::vector<long> residues) {
    std::vector<mpz_class> rs(residues.begin(), residues.end());
    return ProductElement::from_residues(ctx, rs);
}
} // namespace

TEST_SUITE_BEGIN("spectrum");

TEST_CASE("normal form and membership") {
    RingContext ctx = ctx235();
    FinGenIdeal ideal = FinGenIdeal::generated_by(ctx, {elem(ctx, {2, 3, 5})});
    CHECK(ideal.exponents() ==
          std::vector<IdealExponent>{IdealExponent::finite(1), IdealExponent::finite(1),
                                     IdealExponent::finite(1)});
    CHECK(ideal.contains(elem(ctx, {4, 9, 5}))); // valuations (2,2,1)
    CHECK_FALSE(ideal.contains(ProductElement::one(ctx)));
    CHECK(ideal.is_proper());

    FinGenIdeal lower = FinGenIdeal::generated_by(ctx, {elem(ctx, {0, 1, 1})});
    CHECK_FALSE(lower.contains(elem(ctx, {2, 1, 1}))); // v_2(2) = 1 < inf
    CHECK(lower.contains(elem(ctx, {0, 1, 4})));

    // Two generator lists with the same profile are the same ideal.
    FinGenIdeal again =
        FinGenIdeal::generated_by(ctx, {elem(ctx, {2, 3, 5}), elem(ctx, {4, 3, 25})});
    CHECK(again == ideal);
}

TEST_CASE("membership certainty") {
    RingContext ctx = ctx235();
    FinGenIdeal minimal = PrimeIdeal(ctx, 3, PrimeLevel::Minimal).ideal();
    Decision d = minimal.contains_checked(elem(ctx, {1, 0, 4}));
    CHECK(d.value);
    CHECK_FALSE(d.certain); // the zero component could hide p^N * unit
    Decision sharp = minimal.contains_checked(elem(ctx, {1, 3, 4}));
    CHECK_FALSE(sharp.value);
    CHECK(sharp.certain);
}

TEST_CASE("primality classification") {
    RingContext ctx = ctx235();
    auto minimal = classify_prime(FinGenIdeal::generated_by(ctx, {elem(ctx, {1, 0, 1})}));
    REQUIRE(minimal.has_value());
    CHECK(minimal->chain_prime() == 3);
    CHECK(minimal->level() == PrimeLevel::Minimal);

    auto maximal = classify_prime(FinGenIdeal::generated_by(ctx, {elem(ctx, {1, 3, 1})}));
    REQUIRE(maximal.has_value());
    CHECK(maximal->level() == PrimeLevel::Maximal);

    // w = (0, 2, 0) is not prime: x = (1,3,1) lies outside while x^2 lies inside.
    FinGenIdeal squareish = FinGenIdeal::generated_by(ctx, {elem(ctx, {1, 9, 1})});
    CHECK_FALSE(classify_prime(squareish).has_value());
    ProductElement x = elem(ctx, {1, 3, 1});
    CHECK_FALSE(squareish.contains(x));
    CHECK(squareish.contains(x * x));

    CHECK_FALSE(classify_prime(FinGenIdeal::unit_ideal(ctx)).has_value());
    CHECK_FALSE(classify_prime(FinGenIdeal::generated_by(ctx, {elem(ctx, {2, 3, 1})}))
                    .has_value());
}

TEST_CASE("spec enumeration and chains") {
    RingContext ctx = ctx235();
    std::vector<PrimeIdeal> spec = spec_enumerate(ctx);
    CHECK(spec.size() == 6);

    RingContext single(std::vector<long>{2});
    std::vector<PrimeIdeal> tiny = spec_enumerate(single);
    REQUIRE(tiny.size() == 2);
    CHECK(tiny[0].ideal().subset_of(tiny[1].ideal()));

    for (long p : ctx.primes())
        for (long q : ctx.primes())
            CHECK(PrimeIdeal(ctx, p, PrimeLevel::Minimal)
                      .ideal()
                      .subset_of(PrimeIdeal(ctx, q, PrimeLevel::Maximal).ideal()) ==
                  (p == q));

    CHECK(unique_maximal_over(PrimeIdeal(ctx, 3, PrimeLevel::Minimal)) ==
          PrimeIdeal(ctx, 3, PrimeLevel::Maximal));
    CHECK(unique_maximal_over(PrimeIdeal(ctx, 3, PrimeLevel::Maximal)) ==
          PrimeIdeal(ctx, 3, PrimeLevel::Maximal));
}

TEST_CASE("ideals above a prime") {
    RingContext ctx({2, 3}, 3);
    std::vector<FinGenIdeal> chain = ideals_above(PrimeIdeal(ctx, 3, PrimeLevel::Minimal));
    REQUIRE(chain.size() == 5); // w(3) in {inf, 3, 2, 1, 0}
    CHECK(chain[0].exponent_at(3) == IdealExponent::infinity());
    CHECK(chain[1].exponent_at(3) == IdealExponent::finite(3));
    CHECK(chain[4].exponent_at(3) == IdealExponent::finite(0));
    for (const auto& link : chain) CHECK(link.exponent_at(2) == IdealExponent::finite(0));
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        CHECK(chain[i].subset_of(chain[i + 1]));

    std::vector<FinGenIdeal> top = ideals_above(PrimeIdeal(ctx, 3, PrimeLevel::Maximal));
    CHECK(top.size() == 2); // the maximal ideal and the whole ring
    CHECK_FALSE(top[0].contains(ProductElement::one(ctx)));
    CHECK(top[1].contains(ProductElement::one(ctx)));
}

TEST_CASE("value semigroup") {
    PAdicInt fifty = PAdicInt::from_integer(50, 5, 24);
    PAdicInt five = PAdicInt::from_integer(5, 5, 24);
    CHECK(value_compare(fifty, five) == std::strong_ordering::greater); // v 2 vs 1
    CHECK(value_divides(five, fifty));                                  // 5 | 50
    CHECK_FALSE(value_divides(fifty, five));

    PAdicInt one = PAdicInt::one(5, 24);
    CHECK(value_divides(one, fifty));
    CHECK(value_add(fifty, PAdicInt::zero(5, 24)).is_at_least_precision()); // (a) + inf
    CHECK(value_add(fifty, five) == Valuation::exact(3));

    CHECK_THROWS_AS(value_compare(PAdicInt::zero(5, 24), PAdicInt::zero(5, 24)),
                    PrecisionExhausted);
}

TEST_CASE("filters and ultrafilters") {
    RingContext ctx = ctx235();
    CHECK(enumerate_ultrafilters(ctx).size() == 3);
    CHECK(enumerate_ultrafilters(RingContext({2})).size() == 1);
    CHECK(enumerate_ultrafilters(RingContext({2, 3, 5, 7, 11})).size() == 5);

    Filter f(ctx, {2, 3});
    CHECK(f.contains({2, 3}));
    CHECK(f.contains({2, 3, 5}));
    CHECK_FALSE(f.contains({2}));
    CHECK_FALSE(f.is_ultrafilter());
    CHECK_THROWS_AS(Filter(ctx, {}), std::invalid_argument);
}

TEST_CASE("filter of an ideal") {
    RingContext ctx = ctx235();
    Filter f = filter_of_ideal(FinGenIdeal::generated_by(ctx, {elem(ctx, {2, 3, 1})}));
    CHECK(f.base() == PrimeSet{2, 3});

    Filter g = filter_of_ideal(FinGenIdeal::generated_by(ctx, {elem(ctx, {1, 0, 1})}));
    CHECK(g.base() == PrimeSet{3});

    CHECK_THROWS_AS(filter_of_ideal(FinGenIdeal::unit_ideal(ctx)), ImproperIdeal);
    CHECK_THROWS_AS(filter_of_ideal(ctx, {ProductElement::one(ctx)}), ImproperIdeal);
}

TEST_CASE("ideals attached to an ultrafilter") {
    RingContext ctx = ctx235();
    Ultrafilter at3(ctx, 3);

    FinGenIdeal lower = lower_ideal(at3);
    CHECK(lower.canonical_generator() == elem(ctx, {1, 0, 1}));
    CHECK(lower.contains(elem(ctx, {1, 0, 4})));
    CHECK_FALSE(lower.contains(Idempotent(ctx, {3}).element()));

    FinGenIdeal upper = upper_ideal(at3);
    CHECK(upper.canonical_generator() == elem(ctx, {1, 3, 1}));
    CHECK(upper.contains(elem(ctx, {0, 6, 7}))); // v_3(6) = 1
    CHECK_FALSE(upper.contains(ProductElement::one(ctx)));

    CHECK(filter_of_ideal(lower) == at3.filter());
    CHECK(filter_of_ideal(upper) == at3.filter());
    CHECK(minimal_prime_of(at3).ideal() == lower);
    CHECK(maximal_prime_of(at3).ideal() == upper);
}

TEST_SUITE_END();
