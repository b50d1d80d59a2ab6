#include "zhat/sampling.hpp"

namespace zhat {

mpz_class Sampler::residue(const mpz_class& modulus) {
    std::size_t bits = mpz_sizeinbase(modulus.get_mpz_t(), 2);
    std::size_t words = bits / 64 + 2;
    mpz_class acc = 0;
    for (std::size_t i = 0; i < words; ++i) {
        acc <<= 64;
        acc += mpz_class(static_cast<unsigned long>(next_u64()));
    }
    return acc % modulus;
}

PAdicInt Sampler::padic(long prime, int precision) {
    PAdicInt one = PAdicInt::one(prime, precision);
    return PAdicInt(prime, precision, residue(one.modulus()));
}

PAdicInt Sampler::padic_weighted(long prime, int precision) {
    if (coin(8)) return PAdicInt::zero(prime, precision);
    int vmax = precision - 1 < 4 ? precision - 1 : 4;
    int v = static_cast<int>(uniform(0, vmax));
    PAdicInt u = padic(prime, precision);
    while (!u.is_unit()) u = padic(prime, precision);
    mpz_class shift;
    mpz_ui_pow_ui(shift.get_mpz_t(), static_cast<unsigned long>(prime),
                  static_cast<unsigned long>(v));
    return PAdicInt(prime, precision, u.residue() * shift);
}

ProductElement Sampler::element(const RingContext& ctx) {
    std::vector<PAdicInt> comps;
    comps.reserve(ctx.size());
    for (long p : ctx.primes()) comps.push_back(padic(p, ctx.precision()));
    return ProductElement(ctx, std::move(comps));
}

ProductElement Sampler::element_weighted(const RingContext& ctx) {
    std::vector<PAdicInt> comps;
    comps.reserve(ctx.size());
    for (long p : ctx.primes()) comps.push_back(padic_weighted(p, ctx.precision()));
    return ProductElement(ctx, std::move(comps));
}

FinGenIdeal Sampler::proper_ideal(const RingContext& ctx, int max_generators) {
    // Choose a nonempty base on which every generator is a nonunit.
    PrimeSet base;
    while (base.empty())
        for (long p : ctx.primes())
            if (coin(2)) base.push_back(p);

    int count = static_cast<int>(uniform(1, max_generators));
    std::vector<ProductElement> gens;
    gens.reserve(static_cast<std::size_t>(count));
    for (int g = 0; g < count; ++g) {
        std::vector<PAdicInt> comps;
        comps.reserve(ctx.size());
        for (long p : ctx.primes()) {
            PAdicInt c = padic_weighted(p, ctx.precision());
            if (ps_contains(base, p) && c.is_unit())
                c = c * PAdicInt(p, ctx.precision(), p);
            comps.push_back(c);
        }
        gens.emplace_back(ctx, std::move(comps));
    }
    return FinGenIdeal::generated_by(ctx, std::move(gens));
}

} // namespace zhat
