#pragma once

#include <vector>

#include "zhat/ideal.hpp"
#include "zhat/product.hpp"

namespace zhat {

/**
 * A proper filter on the context's index set S, stored by its base B: the
 * filter is {X : B subset X subset S}.  On a finite set every filter is
 * principal, so the base determines it completely.
 */
class Filter {
public:
    Filter(RingContext context, PrimeSet base);

    const RingContext& context() const { return ctx_; }
    const PrimeSet& base() const { return base_; }

    /// Membership of X in the filter: B subset X.
    bool contains(const PrimeSet& x) const { return ps_subset(base_, x); }

    bool is_ultrafilter() const { return base_.size() == 1; }

    bool operator==(const Filter& o) const { return ctx_ == o.ctx_ && base_ == o.base_; }

private:
    RingContext ctx_;
    PrimeSet base_;
};

/// Principal ultrafilter at a point of S.
class Ultrafilter {
public:
    Ultrafilter(RingContext context, long point);

    const RingContext& context() const { return ctx_; }
    long point() const { return point_; }
    Filter filter() const { return Filter(ctx_, PrimeSet{point_}); }

    bool operator==(const Ultrafilter& o) const {
        return ctx_ == o.ctx_ && point_ == o.point_;
    }

private:
    RingContext ctx_;
    long point_;
};

/// One principal ultrafilter per element of S.
std::vector<Ultrafilter> enumerate_ultrafilters(const RingContext& ctx);

/**
 * The filter of an ideal: base = intersection over generators of the nonunit
 * loci.  Throws ImproperIdeal when the ideal is the whole ring (the base
 * would be empty, and a proper filter never contains the empty set).
 */
Filter filter_of_ideal(const FinGenIdeal& ideal);
Filter filter_of_ideal(const RingContext& ctx, std::vector<ProductElement> generators);

/// {f : [[f = 0]] in F} = (1 - e_B): profile Infinity on the base, 0 off it.
FinGenIdeal lower_ideal(const Filter& f);
FinGenIdeal lower_ideal(const Ultrafilter& u);

/// {f : [[f in mu]] in F}: profile 1 on the base, 0 off it.
FinGenIdeal upper_ideal(const Filter& f);
FinGenIdeal upper_ideal(const Ultrafilter& u);

} // namespace zhat
