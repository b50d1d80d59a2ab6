#include <doctest.h>

#include "zhat/json_io.hpp"

using namespace zhat;

TEST_SUITE_BEGIN("json");

TEST_CASE("element wire format") {
    RingContext ctx({2, 3, 5});
    ProductElement f = element_from_json(
        R"({"context": {"primes":[2,3,5], "N":24}, "components": ["4","1","1"]})",
        std::nullopt);
    CHECK(f.context() == ctx);
    CHECK(f.component(2).residue() == 4);
    CHECK(element_from_json(to_json(f), std::nullopt) == f);

    // Bare arrays resolve against the fallback context.
    ProductElement g = element_from_json(R"(["4","1","1"])", ctx);
    CHECK(g == f);

    CHECK_THROWS_AS(element_from_json(R"(["4","1"])", ctx), ParseError);
    CHECK_THROWS_AS(element_from_json(R"(["4","x","1"])", ctx), ParseError);
    CHECK_THROWS_AS(element_from_json(R"(["1"])", std::nullopt), ParseError);
    CHECK_THROWS_AS(element_from_json("{broken", ctx), ParseError);
}

TEST_CASE("error messages name the offending field") {
    RingContext ctx({2, 3});
    try {
        element_from_json(R"({"context": {"primes":[2,4]}, "components":["1","1"]})",
                          std::nullopt);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("context") != std::string::npos);
    }
    try {
        open_set_from_json(R"([{"prime":3,"level":"sideways"}])", ctx);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("level") != std::string::npos);
    }
}

TEST_CASE("filters, primes and sections") {
    RingContext ctx({2, 3, 5});
    CHECK(to_json(Filter(ctx, {2, 3})) == R"({"base":[2,3]})");
    CHECK(to_json(Ultrafilter(ctx, 3)) == R"({"point":3})");
    CHECK(to_json(PrimeIdeal(ctx, 3, PrimeLevel::Minimal)) ==
          R"({"prime":3,"level":"minimal"})");

    PrimeIdeal m3 = prime_from_json(R"({"prime":3,"level":"maximal"})", ctx);
    CHECK(m3.level() == PrimeLevel::Maximal);
    CHECK_THROWS_AS(prime_from_json(R"({"prime":7,"level":"maximal"})", ctx), ParseError);

    OpenSet u = open_set_from_json(
        R"([{"prime":2,"level":"minimal"},{"prime":3,"level":"minimal"},{"prime":3,"level":"maximal"}])",
        ctx);
    std::string rendered = to_json(sections(u));
    CHECK(rendered.find("\"field\"") != std::string::npos);
    CHECK(rendered.find("\"integral\"") != std::string::npos);
    CHECK(rendered.find("\"absent\"") != std::string::npos);
}

TEST_CASE("rationals and adeles") {
    RingContext ctx({2, 3}, 4);
    AdeleElement a =
        AdeleElement::from_fraction(ProductElement::diagonal(ctx, 1), 6);
    AdeleElement back = adele_from_json(to_json(a), std::nullopt);
    CHECK(back == a);
    CHECK(to_json(a.component(2)).find("\"exp\":-1") != std::string::npos);
    CHECK(to_json(PAdicRational::zero(2, 4)).find("\"zero\":true") != std::string::npos);
}

TEST_CASE("asymptotic polynomials") {
    AsymptoticNat x = asymptotic_from_json("[0,0,1]");
    CHECK(x == AsymptoticNat::monomial(2, 1));
    CHECK(asymptotic_from_json(R"({"coefficients": [3,1]})") == AsymptoticNat({3, 1}));
    CHECK_THROWS_AS(asymptotic_from_json("[1,-1]"), ParseError);
    CHECK(to_json(x).find("n^2") != std::string::npos);
}

TEST_CASE("spec listing") {
    RingContext ctx({2, 3, 5});
    std::string listing = spec_listing_json(spec_enumerate(ctx));
    CHECK(listing.find(R"("prime":3,"level":"minimal","generator":["1","0","1"])") !=
          std::string::npos);
    CHECK(listing.find(R"("generator":["1","3","1"])") != std::string::npos);
}

TEST_SUITE_END();
