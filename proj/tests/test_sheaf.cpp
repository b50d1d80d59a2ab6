#include <doctest.h>

#include "zhat/f2.hpp"
#include "zhat/sheaf.hpp"

using namespace zhat;

namespace {
ProductElement elem(const RingContext& ctx, std::vector<long> residues) {
    std::vector<mpz_class> rs(residues.begin(), residues.end());
    return ProductElement::from_residues(ctx, rs);
}
} // namespace

TEST_SUITE_BEGIN("sheaf");

TEST_CASE("open sets are generization-closed point sets") {
    RingContext ctx({2, 3});
    PrimeIdeal p2(ctx, 2, PrimeLevel::Minimal), m2(ctx, 2, PrimeLevel::Maximal);
    PrimeIdeal p3(ctx, 3, PrimeLevel::Minimal), m3(ctx, 3, PrimeLevel::Maximal);

    OpenSet u = OpenSet::from_points(ctx, {p2, p3, m3});
    CHECK(u.contains(p2));
    CHECK_FALSE(u.contains(m2));
    CHECK(u.points().size() == 3);
    CHECK_THROWS_AS(OpenSet::from_points(ctx, {m2}), NotOpen);

    CHECK(OpenSet::enumerate(ctx).size() == 9); // 3^2
    CHECK(OpenSet::whole(ctx).points().size() == 4);
    CHECK(OpenSet::empty(ctx).points().empty());
}

TEST_CASE("basic opens") {
    RingContext ctx({2, 3});
    OpenSet d = basic_open(elem(ctx, {2, 1}));
    CHECK(d == OpenSet::from_points(ctx, {PrimeIdeal(ctx, 2, PrimeLevel::Minimal),
                                          PrimeIdeal(ctx, 3, PrimeLevel::Minimal),
                                          PrimeIdeal(ctx, 3, PrimeLevel::Maximal)}));
    CHECK(basic_open(ProductElement::one(ctx)) == OpenSet::whole(ctx));
    CHECK(basic_open(ProductElement::zero(ctx)) == OpenSet::empty(ctx));
}

TEST_CASE("sections in closed form and as an inverse limit") {
    RingContext ctx({2, 3});
    OpenSet u = OpenSet::from_points(ctx, {PrimeIdeal(ctx, 2, PrimeLevel::Minimal),
                                           PrimeIdeal(ctx, 3, PrimeLevel::Minimal),
                                           PrimeIdeal(ctx, 3, PrimeLevel::Maximal)});
    SectionRing ring = sections(u);
    CHECK(ring.kind_at(2) == SectionKind::Field);    // Q_2
    CHECK(ring.kind_at(3) == SectionKind::Integral); // Z_3

    SectionRing global = sections(OpenSet::whole(ctx));
    CHECK(global.kind_at(2) == SectionKind::Integral);
    CHECK(global.kind_at(3) == SectionKind::Integral);

    OpenSet generic = OpenSet::from_points(ctx, {PrimeIdeal(ctx, 2, PrimeLevel::Minimal)});
    CHECK(sections(generic).kind_at(2) == SectionKind::Field);
    CHECK(sections(generic).kind_at(3) == SectionKind::Absent);

    for (const OpenSet& open : OpenSet::enumerate(ctx))
        CHECK(sections(open) == sections_via_inverse_limit(open));
}

TEST_CASE("stalks") {
    RingContext ctx({2, 3, 5});
    CHECK(stalk(PrimeIdeal(ctx, 3, PrimeLevel::Maximal)).kind_at(3) == SectionKind::Integral);
    CHECK(stalk(PrimeIdeal(ctx, 3, PrimeLevel::Minimal)).kind_at(3) == SectionKind::Field);
    CHECK(stalk(PrimeIdeal(ctx, 3, PrimeLevel::Minimal)).kind_at(2) == SectionKind::Absent);
}

TEST_CASE("reduced products") {
    RingContext ctx({2, 3, 5});
    Filter f(ctx, {2, 3});
    SectionRing reduced_ring = reduced_product(ctx, f);
    CHECK(reduced_ring.kind_at(2) == SectionKind::Integral);
    CHECK(reduced_ring.kind_at(5) == SectionKind::Absent);

    SectionElement image = reduced_projection(elem(ctx, {4, 9, 1}), f);
    CHECK(image.value_at(2) ==
          PAdicRational::from_integral(PAdicInt::from_integer(4, 2, ctx.precision())));
    CHECK_FALSE(image.value_at(5).has_value());

    // The quotient map respects the ring structure.
    ProductElement a = elem(ctx, {3, 5, 7});
    ProductElement b = elem(ctx, {1, 2, 3});
    CHECK(reduced_projection(a, f) + reduced_projection(b, f) == reduced_projection(a + b, f));
    CHECK(reduced_projection(a, f) * reduced_projection(b, f) == reduced_projection(a * b, f));
}

TEST_CASE("sheaf axiom") {
    RingContext ctx({2, 3});
    Idempotent e(ctx, {2});
    OpenSet d1 = basic_open(e.element());
    OpenSet d2 = basic_open(e.complement().element());
    CHECK(sheaf_axiom_check(OpenSet::whole(ctx), {d1, d2}, 7));

    OpenSet generics = OpenSet::from_points(ctx, {PrimeIdeal(ctx, 2, PrimeLevel::Minimal),
                                                  PrimeIdeal(ctx, 3, PrimeLevel::Minimal)});
    OpenSet s1 = OpenSet::from_points(ctx, {PrimeIdeal(ctx, 2, PrimeLevel::Minimal)});
    OpenSet s2 = OpenSet::from_points(ctx, {PrimeIdeal(ctx, 3, PrimeLevel::Minimal)});
    CHECK(sheaf_axiom_check(generics, {s1, s2}, 7));

    OpenSet df = basic_open(elem(ctx, {2, 1}));
    OpenSet dg = basic_open(elem(ctx, {1, 3}));
    CHECK(sheaf_axiom_check(set_union(df, dg), {df, dg}, 7));

    CHECK_THROWS_AS(sheaf_axiom_check(OpenSet::whole(ctx), {d1}, 7), NotACover);
    CHECK_THROWS_AS(sheaf_axiom_check(OpenSet::whole(ctx), {}, 7), NotACover);
}

TEST_CASE("boolean model satisfies the localization identity") {
    using namespace f2;
    for (int n = 1; n <= 4; ++n) {
        BoolRing ring{n};
        for (std::uint32_t f = 0; f <= ring.all(); ++f) {
            BoolLocalization loc = localize_at(ring, f);
            // R_f = R/(1-f) = F_2^{[[f != 0]]}: cosets of (1-f) match the projection.
            std::vector<std::uint32_t> ideal = ring.principal_ideal(ring.complement(f));
            CHECK(ideal.size() == (1u << __builtin_popcount(ring.complement(f))));
            for (std::uint32_t g = 0; g <= ring.all(); ++g) {
                std::uint32_t canonical = ring.all();
                for (std::uint32_t z : ideal) canonical = std::min(canonical, ring.add(g, z));
                CHECK(canonical == loc.map(g));
            }
        }
        // Stalks are F_2.
        for (int i = 0; i < n; ++i) {
            std::uint32_t point = 1u << i;
            CHECK(reduced(ring.all(), point) == point);
            CHECK(reduced(ring.complement(point), point) == 0);
        }
    }
}

TEST_SUITE_END();
