#include "zhat/sheaf.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "zhat/sampling.hpp"

namespace zhat {

OpenSet::OpenSet(RingContext context, std::vector<ChainTrace> traces)
    : ctx_(std::move(context)), traces_(std::move(traces)) {
    if (traces_.size() != ctx_.size())
        throw std::invalid_argument("trace count does not match the context");
}

OpenSet OpenSet::from_points(const RingContext& ctx, const std::vector<PrimeIdeal>& points) {
    std::vector<bool> generic(ctx.size(), false), closed(ctx.size(), false);
    for (const auto& x : points) {
        if (!(x.context() == ctx)) throw MixedContext();
        std::size_t i = ctx.index_of(x.chain_prime());
        (x.level() == PrimeLevel::Minimal ? generic[i] : closed[i]) = true;
    }
    std::vector<ChainTrace> traces(ctx.size(), ChainTrace::Absent);
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (closed[i] && !generic[i]) throw NotOpen();
        traces[i] = closed[i] ? ChainTrace::Both
                              : (generic[i] ? ChainTrace::GenericOnly : ChainTrace::Absent);
    }
    return OpenSet(ctx, std::move(traces));
}

OpenSet OpenSet::whole(const RingContext& ctx) {
    return OpenSet(ctx, std::vector<ChainTrace>(ctx.size(), ChainTrace::Both));
}

OpenSet OpenSet::empty(const RingContext& ctx) {
    return OpenSet(ctx, std::vector<ChainTrace>(ctx.size(), ChainTrace::Absent));
}

std::vector<OpenSet> OpenSet::enumerate(const RingContext& ctx) {
    std::size_t n = ctx.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    std::vector<OpenSet> out;
    out.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<ChainTrace> traces(n);
        std::size_t rest = code;
        for (std::size_t i = 0; i < n; ++i) {
            traces[i] = static_cast<ChainTrace>(rest % 3);
            rest /= 3;
        }
        out.emplace_back(ctx, std::move(traces));
    }
    return out;
}

bool OpenSet::contains(const PrimeIdeal& x) const {
    ChainTrace t = traces_[ctx_.index_of(x.chain_prime())];
    if (x.level() == PrimeLevel::Maximal) return t == ChainTrace::Both;
    return t != ChainTrace::Absent;
}

std::vector<PrimeIdeal> OpenSet::points() const {
    std::vector<PrimeIdeal> out;
    for (std::size_t i = 0; i < ctx_.size(); ++i) {
        long p = ctx_.prime_at(i);
        if (traces_[i] != ChainTrace::Absent) out.emplace_back(ctx_, p, PrimeLevel::Minimal);
        if (traces_[i] == ChainTrace::Both) out.emplace_back(ctx_, p, PrimeLevel::Maximal);
    }
    return out;
}

namespace {
int trace_rank(ChainTrace t) {
    switch (t) {
        case ChainTrace::Absent: return 0;
        case ChainTrace::GenericOnly: return 1;
        case ChainTrace::Both: return 2;
    }
    return 0;
}
} // namespace

bool OpenSet::subset_of(const OpenSet& o) const {
    if (!(ctx_ == o.ctx_)) throw MixedContext();
    for (std::size_t i = 0; i < traces_.size(); ++i)
        if (trace_rank(traces_[i]) > trace_rank(o.traces_[i])) return false;
    return true;
}

OpenSet set_union(const OpenSet& a, const OpenSet& b) {
    if (!(a.ctx_ == b.ctx_)) throw MixedContext();
    std::vector<ChainTrace> traces(a.traces_.size());
    for (std::size_t i = 0; i < traces.size(); ++i)
        traces[i] = trace_rank(a.traces_[i]) >= trace_rank(b.traces_[i]) ? a.traces_[i]
                                                                         : b.traces_[i];
    return OpenSet(a.ctx_, std::move(traces));
}

OpenSet set_intersection(const OpenSet& a, const OpenSet& b) {
    if (!(a.ctx_ == b.ctx_)) throw MixedContext();
    std::vector<ChainTrace> traces(a.traces_.size());
    for (std::size_t i = 0; i < traces.size(); ++i)
        traces[i] = trace_rank(a.traces_[i]) <= trace_rank(b.traces_[i]) ? a.traces_[i]
                                                                         : b.traces_[i];
    return OpenSet(a.ctx_, std::move(traces));
}

// ---------------------------------------------------------------------------

std::string section_kind_name(SectionKind k) {
    switch (k) {
        case SectionKind::Absent: return "absent";
        case SectionKind::Integral: return "integral";
        case SectionKind::Field: return "field";
    }
    return "absent";
}

SectionRing::SectionRing(RingContext context, std::vector<SectionKind> kinds)
    : ctx_(std::move(context)), kinds_(std::move(kinds)) {
    if (kinds_.size() != ctx_.size())
        throw std::invalid_argument("kind count does not match the context");
}

SectionElement::SectionElement(SectionRing ring,
                               std::vector<std::optional<PAdicRational>> values)
    : ring_(std::move(ring)), values_(std::move(values)) {
    const RingContext& ctx = ring_.context();
    if (values_.size() != ctx.size())
        throw std::invalid_argument("value count does not match the context");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        SectionKind k = ring_.kinds()[i];
        if ((k == SectionKind::Absent) != !values_[i].has_value())
            throw std::invalid_argument("value present iff the chain survives");
        if (k == SectionKind::Integral && !values_[i]->is_integral())
            throw std::invalid_argument("integral slot holds a value with a pole");
    }
}

SectionElement SectionElement::restrict_global(const SectionRing& ring,
                                               const ProductElement& f) {
    if (!(f.context() == ring.context())) throw MixedContext();
    std::vector<std::optional<PAdicRational>> values;
    values.reserve(ring.context().size());
    for (std::size_t i = 0; i < ring.context().size(); ++i) {
        if (ring.kinds()[i] == SectionKind::Absent)
            values.emplace_back(std::nullopt);
        else
            values.emplace_back(PAdicRational::from_integral(f.component_at(i)));
    }
    return SectionElement(ring, std::move(values));
}

SectionElement SectionElement::restrict_to(const SectionRing& smaller) const {
    if (!(smaller.context() == ring_.context())) throw MixedContext();
    std::vector<std::optional<PAdicRational>> values;
    values.reserve(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) {
        SectionKind from = ring_.kinds()[i];
        SectionKind to = smaller.kinds()[i];
        if (to == SectionKind::Absent) {
            values.emplace_back(std::nullopt);
            continue;
        }
        if (from == SectionKind::Absent)
            throw std::invalid_argument("restriction target is not a subring image");
        values.push_back(values_[i]);
    }
    return SectionElement(smaller, std::move(values));
}

namespace {
template <typename Op>
SectionElement zip_sections(const SectionElement& a, const SectionElement& b, Op op) {
    if (!(a.ring() == b.ring())) throw MixedContext();
    const RingContext& ctx = a.ring().context();
    std::vector<std::optional<PAdicRational>> values;
    values.reserve(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        long p = ctx.prime_at(i);
        const auto& x = a.value_at(p);
        const auto& y = b.value_at(p);
        if (!x.has_value())
            values.emplace_back(std::nullopt);
        else
            values.emplace_back(op(*x, *y));
    }
    return SectionElement(a.ring(), std::move(values));
}
} // namespace

SectionElement operator+(const SectionElement& a, const SectionElement& b) {
    return zip_sections(a, b,
                        [](const PAdicRational& x, const PAdicRational& y) { return x + y; });
}

SectionElement operator*(const SectionElement& a, const SectionElement& b) {
    return zip_sections(a, b,
                        [](const PAdicRational& x, const PAdicRational& y) { return x * y; });
}

// ---------------------------------------------------------------------------

OpenSet basic_open(const ProductElement& f) {
    const RingContext& ctx = f.context();
    std::vector<ChainTrace> traces;
    traces.reserve(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        const PAdicInt& c = f.component_at(i);
        if (c.is_zero())
            traces.push_back(ChainTrace::Absent);
        else if (c.is_unit())
            traces.push_back(ChainTrace::Both);
        else
            traces.push_back(ChainTrace::GenericOnly);
    }
    return OpenSet(ctx, std::move(traces));
}

SectionRing sections(const OpenSet& u) {
    const RingContext& ctx = u.context();
    std::vector<SectionKind> kinds;
    kinds.reserve(ctx.size());
    for (ChainTrace t : u.traces()) {
        switch (t) {
            case ChainTrace::Absent: kinds.push_back(SectionKind::Absent); break;
            case ChainTrace::GenericOnly: kinds.push_back(SectionKind::Field); break;
            case ChainTrace::Both: kinds.push_back(SectionKind::Integral); break;
        }
    }
    return SectionRing(ctx, std::move(kinds));
}

namespace {

/// Canonical element whose basic open has the given traces: 1 / p / 0 per chain.
ProductElement canonical_for(const RingContext& ctx, const std::vector<ChainTrace>& traces) {
    std::vector<mpz_class> residues;
    residues.reserve(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        switch (traces[i]) {
            case ChainTrace::Both: residues.emplace_back(1); break;
            case ChainTrace::GenericOnly: residues.emplace_back(ctx.prime_at(i)); break;
            case ChainTrace::Absent: residues.emplace_back(0); break;
        }
    }
    return ProductElement::from_residues(ctx, residues);
}

/// Classification of the localization of the full product at powers of f,
/// read off the component valuations alone.
SectionRing localization_at_powers(const ProductElement& f) {
    const RingContext& ctx = f.context();
    std::vector<SectionKind> kinds;
    kinds.reserve(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        const PAdicInt& c = f.component_at(i);
        if (c.is_zero())
            kinds.push_back(SectionKind::Absent); // component is killed
        else if (c.is_unit())
            kinds.push_back(SectionKind::Integral); // already invertible
        else
            kinds.push_back(SectionKind::Field); // inverting c inverts p
    }
    return SectionRing(ctx, std::move(kinds));
}

} // namespace

SectionRing sections_via_inverse_limit(const OpenSet& u) {
    const RingContext& ctx = u.context();

    // The projective system: every basic open D(f) contained in U, with the
    // canonical representative per trace class.
    struct Node {
        ProductElement f;
        OpenSet open;
        SectionRing localized;
    };
    std::vector<Node> nodes;
    for (const OpenSet& candidate : OpenSet::enumerate(ctx)) {
        ProductElement f = canonical_for(ctx, candidate.traces());
        OpenSet d = basic_open(f);
        if (!d.subset_of(u)) continue;
        nodes.push_back(Node{f, d, localization_at_powers(f)});
    }
    if (nodes.empty()) throw std::logic_error("the empty basic open is always present");

    // The poset is directed with a top element (every open here is basic);
    // the limit of the system is the ring at the top.
    const Node* top = nullptr;
    for (const Node& n : nodes) {
        bool is_top = true;
        for (const Node& m : nodes)
            if (!m.open.subset_of(n.open)) { is_top = false; break; }
        if (is_top) { top = &n; break; }
    }
    if (top == nullptr) throw std::logic_error("projective system lacks a top element");

    // Functoriality of the connecting maps on probe elements: restricting
    // from the top through any middle node agrees with restricting directly.
    std::vector<ProductElement> probes;
    probes.push_back(ProductElement::one(ctx));
    probes.push_back(ProductElement::diagonal(ctx, 2));
    probes.push_back(canonical_for(ctx, std::vector<ChainTrace>(ctx.size(), ChainTrace::GenericOnly)));
    for (const Node& mid : nodes) {
        if (!mid.open.subset_of(top->open)) continue;
        for (const Node& low : nodes) {
            if (!low.open.subset_of(mid.open)) continue;
            for (const ProductElement& x : probes) {
                SectionElement via_mid = SectionElement::restrict_global(mid.localized, x)
                                             .restrict_to(low.localized);
                SectionElement direct = SectionElement::restrict_global(low.localized, x);
                if (!(via_mid == direct))
                    throw std::logic_error("connecting maps fail to commute");
            }
        }
    }

    return top->localized;
}

SectionRing stalk(const PrimeIdeal& x) {
    // The smallest open containing x: its own chain trace, nothing else.
    const RingContext& ctx = x.context();
    std::vector<ChainTrace> traces(ctx.size(), ChainTrace::Absent);
    traces[ctx.index_of(x.chain_prime())] =
        x.level() == PrimeLevel::Maximal ? ChainTrace::Both : ChainTrace::GenericOnly;
    return sections(OpenSet(ctx, std::move(traces)));
}

SectionRing reduced_product(const RingContext& ctx, const Filter& f) {
    if (!(f.context() == ctx)) throw MixedContext();
    std::vector<SectionKind> kinds;
    kinds.reserve(ctx.size());
    for (long p : ctx.primes())
        kinds.push_back(ps_contains(f.base(), p) ? SectionKind::Integral
                                                 : SectionKind::Absent);
    return SectionRing(ctx, std::move(kinds));
}

SectionElement reduced_projection(const ProductElement& f, const Filter& filter) {
    return SectionElement::restrict_global(reduced_product(f.context(), filter), f);
}

// ---------------------------------------------------------------------------

namespace {

PAdicRational sample_section_value(Sampler& sampler, long p, int precision,
                                   SectionKind kind) {
    PAdicInt u = sampler.padic(p, precision);
    while (!u.is_unit()) u = sampler.padic(p, precision);
    long lo = kind == SectionKind::Field ? -3 : 0;
    long exp = sampler.uniform(lo, 3);
    return PAdicRational::from_parts(exp, u);
}

} // namespace

bool sheaf_axiom_check(const OpenSet& u, const std::vector<OpenSet>& cover,
                       std::uint64_t seed) {
    const RingContext& ctx = u.context();
    if (cover.empty()) throw NotACover();
    OpenSet joined = OpenSet::empty(ctx);
    for (const OpenSet& piece : cover) {
        if (!piece.subset_of(u)) throw NotACover();
        joined = set_union(joined, piece);
    }
    if (!(joined == u)) throw NotACover();

    // Equalizer of the cover, per chain: integral as soon as one piece sees
    // the closed point, a field if only generic points appear.
    std::vector<SectionKind> glued(ctx.size(), SectionKind::Absent);
    for (const OpenSet& piece : cover) {
        for (std::size_t i = 0; i < ctx.size(); ++i) {
            switch (piece.traces()[i]) {
                case ChainTrace::Both: glued[i] = SectionKind::Integral; break;
                case ChainTrace::GenericOnly:
                    if (glued[i] == SectionKind::Absent) glued[i] = SectionKind::Field;
                    break;
                case ChainTrace::Absent: break;
            }
        }
    }
    SectionRing target = sections(u);
    if (!(SectionRing(ctx, glued) == target)) return false;

    std::vector<SectionRing> piece_rings;
    piece_rings.reserve(cover.size());
    for (const OpenSet& piece : cover) piece_rings.push_back(sections(piece));

    Sampler sampler(seed ^ 0x5eaf5eaf5eaf5eafULL);
    const int kRounds = 24;
    for (int round = 0; round < kRounds; ++round) {
        // A compatible family is one value per surviving chain, integral as
        // soon as any piece demands it.  Build one, glue it, restrict it back.
        std::vector<std::optional<PAdicRational>> values(ctx.size());
        for (std::size_t i = 0; i < ctx.size(); ++i) {
            if (target.kinds()[i] == SectionKind::Absent) continue;
            values[i] = sample_section_value(sampler, ctx.prime_at(i), ctx.precision(),
                                             target.kinds()[i]);
        }
        SectionElement global(target, values);
        for (std::size_t k = 0; k < cover.size(); ++k) {
            SectionElement part = global.restrict_to(piece_rings[k]);
            for (std::size_t i = 0; i < ctx.size(); ++i) {
                long p = ctx.prime_at(i);
                if (piece_rings[k].kinds()[i] == SectionKind::Absent) continue;
                if (!(part.value_at(p) == values[i])) return false;
            }
            // Overlap agreement against every other piece.
            for (std::size_t l = k + 1; l < cover.size(); ++l) {
                SectionRing overlap = sections(set_intersection(cover[k], cover[l]));
                SectionElement a = part.restrict_to(overlap);
                SectionElement b = global.restrict_to(piece_rings[l]).restrict_to(overlap);
                if (!(a == b)) return false;
            }
        }

        // Injectivity: a second family differing somewhere must restrict
        // differently on some piece, unless U is empty.
        if (target.kinds() != std::vector<SectionKind>(ctx.size(), SectionKind::Absent)) {
            std::vector<std::optional<PAdicRational>> other = values;
            for (std::size_t i = 0; i < ctx.size(); ++i) {
                if (!other[i].has_value()) continue;
                other[i] = *other[i] + PAdicRational::from_integral(
                                           PAdicInt::one(ctx.prime_at(i), ctx.precision()));
                break;
            }
            SectionElement tweaked(target, other);
            bool seen_difference = false;
            for (const SectionRing& ring : piece_rings)
                if (!(global.restrict_to(ring) == tweaked.restrict_to(ring)))
                    seen_difference = true;
            if (!seen_difference) return false;
        }
    }
    return true;
}

} // namespace zhat
