#include <doctest.h>

#include "zhat/product.hpp"

using namespace zhat;

namespace {
RingContext ctx235(int precision = 24) { return RingContext({2, 3, 5}, precision); }

ProductElement elem(const RingContext& ctx, std::vector<long> residues) {
    std::vector<mpz_class> rs(residues.begin(), residues.end());
    return ProductElement::from_residues(ctx, rs);
}
} // namespace

TEST_SUITE_BEGIN("product");

TEST_CASE("context invariants") {
    CHECK_THROWS_AS(RingContext({}), std::invalid_argument);
    CHECK_THROWS_AS(RingContext({3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(RingContext({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(RingContext({2, 4}), NonPrimeModulus);
    RingContext ctx = ctx235();
    CHECK(ctx.precision() == 24);
    CHECK(ctx.index_of(5) == 2);
    CHECK_THROWS_AS(ctx.index_of(7), std::invalid_argument);
    CHECK(ctx.prefix(2) == RingContext({2, 3}));
}

TEST_CASE("truth sets") {
    RingContext ctx = ctx235();
    ProductElement f = elem(ctx, {0, 3, 1});

    TruthSet zero = truth_set(f, Predicate::IsZero);
    CHECK(zero.members == PrimeSet{2});
    CHECK_FALSE(zero.certain); // rests on a residue that vanishes to all digits

    TruthSet mu = truth_set(f, Predicate::InMaximal);
    CHECK(mu.members == PrimeSet{2, 3});
    CHECK(mu.certain);

    CHECK(truth_set(f, Predicate::IsUnit).members == PrimeSet{5});

    // Idempotents split the predicates cleanly.
    Idempotent e(ctx, {2, 3});
    CHECK(truth_set(e.element(), Predicate::IsZero).members == PrimeSet{5});
    CHECK(truth_set(e.element(), Predicate::IsUnit).members == PrimeSet{2, 3});

    ProductElement one = ProductElement::one(ctx);
    CHECK(truth_set(one, Predicate::InMaximal).members.empty());
    CHECK(truth_set(one, Predicate::IsZero).certain);
}

TEST_CASE("unit criterion") {
    RingContext ctx = ctx235();
    CHECK(is_unit(elem(ctx, {1, 1, 1})));
    CHECK_FALSE(is_unit(elem(ctx, {2, 1, 1})));
    CHECK_FALSE(is_unit(Idempotent(ctx, {2}).element()));
    CHECK(elem(ctx, {1, 2, 3}).inverse() * elem(ctx, {1, 2, 3}) == ProductElement::one(ctx));
    CHECK_THROWS_AS(elem(ctx, {2, 1, 1}).inverse(), NotAUnit);
}

TEST_CASE("division witness") {
    RingContext ctx = ctx235();
    ProductElement f = elem(ctx, {4, 1, 1});
    DivisionWitness w = division_witness(f);
    CHECK(w.nonunit_locus == PrimeSet{2});
    CHECK(w.cofactor == elem(ctx, {0, 1, 1}));
    CHECK(f * w.cofactor == elem(ctx, {0, 1, 1})); // 1 - e_{{2}}
}

TEST_CASE("idempotent algebra") {
    RingContext ctx = ctx235();
    Idempotent a(ctx, {2, 3});
    Idempotent b(ctx, {3, 5});
    CHECK(meet(a, b) == Idempotent(ctx, {3}));
    CHECK(a.element() * b.element() == Idempotent(ctx, {3}).element());
    CHECK(join(Idempotent(ctx, {2}), Idempotent(ctx, {3})) == Idempotent(ctx, {2, 3}));
    CHECK(Idempotent(ctx, ctx.primes()).complement() == Idempotent(ctx, {}));
    CHECK(Idempotent(ctx, {}).element() == ProductElement::zero(ctx));
    CHECK_THROWS_AS(meet(a, Idempotent(RingContext({2, 3}), {2})), MixedContext);
    CHECK_THROWS_AS(Idempotent(ctx, {7}), std::invalid_argument);
}

TEST_CASE("componentwise arithmetic") {
    RingContext ctx = ctx235(3);
    ProductElement f = elem(ctx, {3, 13, 2});
    ProductElement g = elem(ctx, {5, 14, 63});
    CHECK(f + g == elem(ctx, {0, 0, 65}));
    CHECK(f * g == elem(ctx, {7, 20, 1})); // 15 mod 8, 182 mod 27, 126 mod 125
    CHECK(-f == elem(ctx, {5, 14, 123}));
    CHECK_THROWS_AS(f + ProductElement::one(ctx235(4)), MixedContext);
}

TEST_SUITE_END();
