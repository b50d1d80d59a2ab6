#include <doctest.h>

#include "zhat/asymptotic.hpp"

using namespace zhat;

TEST_SUITE_BEGIN("asymptotic");

TEST_CASE("eventual dominance") {
    AsymptoticNat n2 = AsymptoticNat::monomial(2, 1);
    AsymptoticNat n5 = AsymptoticNat({0, 5}); // 5n
    CHECK(n2 > n5);
    CHECK(n5 < n2);
    CHECK(n5 == n5);
    CHECK(AsymptoticNat({3, 1}) > AsymptoticNat({1, 1})); // n+3 vs n+1
    // The dominance threshold is concrete: n^2 > 5n for every n >= 6.
    for (long long n = 6; n <= 100; ++n) CHECK(n2.eval(n) > n5.eval(n));

    CHECK(AsymptoticNat() < AsymptoticNat::constant(1));
    CHECK(AsymptoticNat({-7, 1}) > AsymptoticNat()); // eventually nonnegative
    CHECK_THROWS_AS(AsymptoticNat({1, -1}), std::invalid_argument);
}

TEST_CASE("semigroup structure") {
    AsymptoticNat a({1, 2});
    AsymptoticNat b({0, 0, 3});
    CHECK(a + b == AsymptoticNat({1, 2, 3}));
    CHECK(a.times(3) == AsymptoticNat({3, 6}));
    CHECK(a + AsymptoticNat() == a);
    CHECK_THROWS_AS(a.times(0), std::invalid_argument);
}

TEST_CASE("archimedean classes") {
    CHECK(archimedean_class(AsymptoticNat({0, 0, 3})) == 2);
    CHECK(same_archimedean_class(AsymptoticNat({0, 0, 3}), AsymptoticNat({0, 0, 1})));
    CHECK_FALSE(same_archimedean_class(AsymptoticNat({0, 1}), AsymptoticNat({0, 0, 1})));
    CHECK(archimedean_class(AsymptoticNat::constant(7)) == 0);
    CHECK_THROWS_AS(archimedean_class(AsymptoticNat()), ZeroHasNoClass);
}

TEST_CASE("least convex subsemigroup") {
    CHECK(least_convex_containing(AsymptoticNat()) == ConvexSubsemigroup::zero());
    CHECK(least_convex_containing(AsymptoticNat::constant(5)) ==
          ConvexSubsemigroup::standard());
    CHECK(least_convex_containing(AsymptoticNat({0, 1, 0, 1})) ==
          ConvexSubsemigroup::degree_at_most(3));
}

TEST_CASE("convex membership and inclusion") {
    ConvexSubsemigroup standard = ConvexSubsemigroup::standard();
    CHECK(standard.contains(AsymptoticNat::constant(9)));
    CHECK_FALSE(standard.contains(AsymptoticNat::monomial(1, 1)));
    CHECK(ConvexSubsemigroup::zero().subset_of(standard));
    CHECK(standard.subset_of(ConvexSubsemigroup::degree_at_most(1)));
    CHECK(ConvexSubsemigroup::degree_at_most(2).subset_of(ConvexSubsemigroup::degree_at_most(3)));
    CHECK(ConvexSubsemigroup::degree_at_most(9).subset_of(ConvexSubsemigroup::all()));
    CHECK_FALSE(ConvexSubsemigroup::all().subset_of(ConvexSubsemigroup::degree_at_most(9)));
}

TEST_CASE("galois correspondence") {
    // Delta = standard maps to the valuations of degree >= 1.
    SymbolicPrime p = prime_of(ConvexSubsemigroup::standard());
    CHECK(p.contains_valuation(AsymptoticNat::monomial(1, 1)));
    CHECK_FALSE(p.contains_valuation(AsymptoticNat::constant(1000)));
    CHECK(convex_of(p) == ConvexSubsemigroup::standard());

    // Delta = all maps to the zero ideal: only the infinite valuation remains.
    SymbolicPrime top = prime_of(ConvexSubsemigroup::all());
    CHECK_FALSE(top.contains_valuation(AsymptoticNat::monomial(7, 9)));
    CHECK(top.contains_infinite_valuation());
    CHECK(convex_of(top) == ConvexSubsemigroup::all());

    // Round trips on the remaining shapes.
    for (int d = 1; d <= 6; ++d)
        CHECK(convex_of(prime_of(ConvexSubsemigroup::degree_at_most(d))) ==
              ConvexSubsemigroup::degree_at_most(d));
    CHECK(convex_of(prime_of(ConvexSubsemigroup::zero())) == ConvexSubsemigroup::zero());

    // Order reversal.
    SymbolicPrime small = prime_of(ConvexSubsemigroup::degree_at_most(2));
    SymbolicPrime smaller = prime_of(ConvexSubsemigroup::degree_at_most(3));
    AsymptoticNat probe = AsymptoticNat::monomial(3, 1);
    CHECK(small.contains_valuation(probe));
    CHECK_FALSE(smaller.contains_valuation(probe));
}

TEST_SUITE_END();
