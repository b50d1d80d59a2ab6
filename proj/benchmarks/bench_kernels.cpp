// Microbenchmarks for the exact modular kernels and the structural sweeps
// built on them.

#include <benchmark/benchmark.h>

#include "zhat/padic.hpp"
#include "zhat/product.hpp"
#include "zhat/sampling.hpp"
#include "zhat/sheaf.hpp"
#include "zhat/spectrum.hpp"

namespace {

void BM_padic_mul(benchmark::State& state) {
    int digits = static_cast<int>(state.range(0));
    zhat::Sampler s(1);
    zhat::PAdicInt a = s.padic(7, digits);
    zhat::PAdicInt b = s.padic(7, digits);
    for (auto _ : state) {
        zhat::PAdicInt c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_padic_mul)->Arg(24)->Arg(96)->Arg(384)->Arg(1536);

void BM_padic_inverse(benchmark::State& state) {
    int digits = static_cast<int>(state.range(0));
    zhat::Sampler s(2);
    zhat::PAdicInt a = s.padic(7, digits);
    while (!a.is_unit()) a = s.padic(7, digits);
    for (auto _ : state) {
        zhat::PAdicInt c = a.inverse();
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_padic_inverse)->Arg(24)->Arg(96)->Arg(384)->Arg(1536);

void BM_hensel_sqrt2(benchmark::State& state) {
    int digits = static_cast<int>(state.range(0));
    zhat::IntPolynomial poly{-2, 0, 1};
    zhat::PAdicInt seed(7, digits, 3);
    for (auto _ : state) {
        zhat::PAdicInt root = zhat::hensel_lift(poly, seed);
        benchmark::DoNotOptimize(root);
    }
}
BENCHMARK(BM_hensel_sqrt2)->Arg(24)->Arg(96)->Arg(384)->Arg(1536);

std::vector<long> first_primes(std::size_t count) {
    std::vector<long> primes;
    for (long n = 2; primes.size() < count; ++n)
        if (zhat::is_prime_number(n)) primes.push_back(n);
    return primes;
}

void BM_division_witness(benchmark::State& state) {
    zhat::RingContext ctx(first_primes(static_cast<std::size_t>(state.range(0))), 24);
    zhat::Sampler s(3);
    zhat::ProductElement f = s.element_weighted(ctx);
    for (auto _ : state) {
        auto w = zhat::division_witness(f);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_division_witness)->Arg(4)->Arg(16);

void BM_ideal_membership(benchmark::State& state) {
    zhat::RingContext ctx(first_primes(static_cast<std::size_t>(state.range(0))), 24);
    zhat::Sampler s(4);
    zhat::FinGenIdeal ideal = s.proper_ideal(ctx, 3);
    zhat::ProductElement f = s.element_weighted(ctx);
    for (auto _ : state) {
        bool in = ideal.contains(f);
        benchmark::DoNotOptimize(in);
    }
}
BENCHMARK(BM_ideal_membership)->Arg(4)->Arg(16);

void BM_sections_inverse_limit(benchmark::State& state) {
    zhat::RingContext ctx(first_primes(static_cast<std::size_t>(state.range(0))), 8);
    zhat::OpenSet u = zhat::OpenSet::whole(ctx);
    for (auto _ : state) {
        zhat::SectionRing ring = zhat::sections_via_inverse_limit(u);
        benchmark::DoNotOptimize(ring);
    }
}
BENCHMARK(BM_sections_inverse_limit)->Arg(2)->Arg(3);

} // namespace

BENCHMARK_MAIN();
