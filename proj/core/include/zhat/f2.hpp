#pragma once

#include <cstdint>
#include <vector>

namespace zhat::f2 {

/**
 * The boolean model: F_2^n for a small index set, elements as bitmasks.
 * Addition is xor, multiplication is and, and every element is idempotent,
 * so subsets of the index set and ring elements coincide.  Filters are given
 * by a base mask; localizations at an element, quotients by 1 - e, and
 * reduced products all collapse to coordinate projections.
 */
struct BoolRing {
    int size; // number of indices, <= 20

    std::uint32_t all() const { return (1u << size) - 1u; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a ^ b) & all(); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return a & b; }
    std::uint32_t complement(std::uint32_t a) const { return ~a & all(); }

    /// [[f != 0]]: for idempotent components this is the support itself.
    std::uint32_t nonzero_locus(std::uint32_t f) const { return f & all(); }

    /// Every element of the principal ideal (g): the multiples of g.
    std::vector<std::uint32_t> principal_ideal(std::uint32_t g) const;
};

/// Localization at the powers of f (an idempotent): the projection onto the
/// support of f, with image ring F_2^{[[f != 0]]}.
struct BoolLocalization {
    std::uint32_t support;
    std::uint32_t map(std::uint32_t g) const { return g & support; }
};

BoolLocalization localize_at(const BoolRing& ring, std::uint32_t f);

/// Reduced product by the filter with the given base: projection onto it.
std::uint32_t reduced(std::uint32_t g, std::uint32_t base_mask);

} // namespace zhat::f2
