#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zhat/localization.hpp"
#include "zhat/spectrum.hpp"

namespace zhat {

/// Trace of one chain inside an open set: neither point, the generic
/// (minimal) point only, or both points.
enum class ChainTrace { Absent, GenericOnly, Both };

/**
 * An open of the finite Zariski spectrum, stored per chain.  Openness is
 * exactly closure under generization: a chain may never contribute its
 * closed point without its generic point, so ChainTrace captures every case.
 */
class OpenSet {
public:
    OpenSet(RingContext context, std::vector<ChainTrace> traces);

    /// Throws NotOpen when some maximal point arrives without its generic point.
    static OpenSet from_points(const RingContext& ctx, const std::vector<PrimeIdeal>& points);
    static OpenSet whole(const RingContext& ctx);
    static OpenSet empty(const RingContext& ctx);

    /// All 3^|S| opens of the context, in lexicographic trace order.
    static std::vector<OpenSet> enumerate(const RingContext& ctx);

    const RingContext& context() const { return ctx_; }
    const std::vector<ChainTrace>& traces() const { return traces_; }
    ChainTrace trace_at(long p) const { return traces_[ctx_.index_of(p)]; }

    bool contains(const PrimeIdeal& x) const;
    std::vector<PrimeIdeal> points() const;

    bool subset_of(const OpenSet& o) const;
    friend OpenSet set_union(const OpenSet& a, const OpenSet& b);
    friend OpenSet set_intersection(const OpenSet& a, const OpenSet& b);

    bool operator==(const OpenSet& o) const {
        return ctx_ == o.ctx_ && traces_ == o.traces_;
    }

private:
    RingContext ctx_;
    std::vector<ChainTrace> traces_;
};

/// Per-chain classification of a ring of sections.
enum class SectionKind { Absent, Integral, Field };

std::string section_kind_name(SectionKind k);

/// Sections over an open set: one factor Z_p (Integral) or Q_p (Field) per
/// surviving chain.
class SectionRing {
public:
    SectionRing(RingContext context, std::vector<SectionKind> kinds);

    const RingContext& context() const { return ctx_; }
    const std::vector<SectionKind>& kinds() const { return kinds_; }
    SectionKind kind_at(long p) const { return kinds_[ctx_.index_of(p)]; }

    bool operator==(const SectionRing& o) const {
        return ctx_ == o.ctx_ && kinds_ == o.kinds_;
    }

private:
    RingContext ctx_;
    std::vector<SectionKind> kinds_;
};

/// An element of a section ring: one rational per surviving chain, integral
/// wherever the ring is.
class SectionElement {
public:
    SectionElement(SectionRing ring, std::vector<std::optional<PAdicRational>> values);

    /// Image of a global element under the restriction R -> Gamma(ring).
    static SectionElement restrict_global(const SectionRing& ring, const ProductElement& f);

    const SectionRing& ring() const { return ring_; }
    const std::optional<PAdicRational>& value_at(long p) const {
        return values_[ring_.context().index_of(p)];
    }

    /// Further restriction to the sections over a smaller open.
    SectionElement restrict_to(const SectionRing& smaller) const;

    friend SectionElement operator+(const SectionElement& a, const SectionElement& b);
    friend SectionElement operator*(const SectionElement& a, const SectionElement& b);

    bool operator==(const SectionElement& o) const {
        return ring_ == o.ring_ && values_ == o.values_;
    }

private:
    SectionRing ring_;
    std::vector<std::optional<PAdicRational>> values_;
};

/// D(f) = {x : f not in x}.
OpenSet basic_open(const ProductElement& f);

/// Closed-form sections: Integral where the closed point is in U, Field where
/// only the generic point is, Absent elsewhere.
SectionRing sections(const OpenSet& u);

/**
 * Independent route to the same ring: enumerate the basic opens D(f)
 * contained in U, localize the full product at each canonical f, and take
 * the limit of the resulting projective system over the poset of basic
 * opens.  The poset has a top element (every open here is basic), and the
 * limit is read off from the localization at its canonical element; the
 * connecting maps are checked for functoriality along the way.
 */
SectionRing sections_via_inverse_limit(const OpenSet& u);

/// The stalk at a point: sections over the smallest open containing it.
SectionRing stalk(const PrimeIdeal& x);

/// Reduced product of the component rings by a filter: the projection onto
/// the base coordinates.
SectionRing reduced_product(const RingContext& ctx, const Filter& f);
SectionElement reduced_projection(const ProductElement& f, const Filter& filter);

/**
 * Gluing check for a cover of U: the per-chain classifications of the cover
 * must assemble to the sections over U, restriction to the cover must be
 * injective, and every compatible family must glue.  Families are sampled
 * deterministically from `seed`.  Throws NotACover when the union differs
 * from U.
 */
bool sheaf_axiom_check(const OpenSet& u, const std::vector<OpenSet>& cover,
                       std::uint64_t seed = 0);

} // namespace zhat
