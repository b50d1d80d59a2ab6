#include "zhat/f2.hpp"

namespace zhat::f2 {

std::vector<std::uint32_t> BoolRing::principal_ideal(std::uint32_t g) const {
    // {g h : h} = all subsets of the support of g.
    std::uint32_t s = g & all();
    std::vector<std::uint32_t> out;
    std::uint32_t sub = 0;
    while (true) {
        out.push_back(sub);
        if (sub == s) break;
        sub = (sub - s) & s; // next subset of s
    }
    return out;
}

BoolLocalization localize_at(const BoolRing& ring, std::uint32_t f) {
    return BoolLocalization{ring.nonzero_locus(f)};
}

std::uint32_t reduced(std::uint32_t g, std::uint32_t base_mask) {
    return g & base_mask;
}

} // namespace zhat::f2
