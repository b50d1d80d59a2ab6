#include "zhat/product.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace zhat {

PrimeSet ps_union(const PrimeSet& a, const PrimeSet& b) {
    PrimeSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

PrimeSet ps_intersection(const PrimeSet& a, const PrimeSet& b) {
    PrimeSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

PrimeSet ps_difference(const PrimeSet& a, const PrimeSet& b) {
    PrimeSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool ps_contains(const PrimeSet& s, long p) {
    return std::binary_search(s.begin(), s.end(), p);
}

bool ps_subset(const PrimeSet& a, const PrimeSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

RingContext::RingContext(std::vector<long> primes, int precision)
    : primes_(std::move(primes)), precision_(precision) {
    if (primes_.empty()) throw std::invalid_argument("context needs at least one prime");
    if (precision_ < 1) throw std::invalid_argument("precision must be >= 1");
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (!is_prime_number(primes_[i])) throw NonPrimeModulus(primes_[i]);
        if (i > 0 && primes_[i - 1] >= primes_[i])
            throw std::invalid_argument("primes must be strictly increasing");
    }
}

bool RingContext::has_prime(long p) const {
    return std::binary_search(primes_.begin(), primes_.end(), p);
}

std::size_t RingContext::index_of(long p) const {
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p)
        throw std::invalid_argument("prime " + std::to_string(p) + " not in context");
    return static_cast<std::size_t>(it - primes_.begin());
}

RingContext RingContext::prefix(std::size_t k) const {
    if (k == 0 || k > primes_.size()) throw std::invalid_argument("bad prefix length");
    return RingContext(std::vector<long>(primes_.begin(), primes_.begin() + k), precision_);
}

// ---------------------------------------------------------------------------

ProductElement::ProductElement(RingContext context, std::vector<PAdicInt> components)
    : ctx_(std::move(context)), components_(std::move(components)) {
    if (components_.size() != ctx_.size())
        throw MixedContext("component count does not match the context");
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (components_[i].prime() != ctx_.prime_at(i) ||
            components_[i].precision() != ctx_.precision())
            throw MixedContext("component does not match the context slot");
    }
}

ProductElement ProductElement::from_residues(const RingContext& ctx,
                                             const std::vector<mpz_class>& residues) {
    if (residues.size() != ctx.size())
        throw MixedContext("residue count does not match the context");
    std::vector<PAdicInt> comps;
    comps.reserve(residues.size());
    for (std::size_t i = 0; i < residues.size(); ++i)
        comps.emplace_back(ctx.prime_at(i), ctx.precision(), residues[i]);
    return ProductElement(ctx, std::move(comps));
}

ProductElement ProductElement::diagonal(const RingContext& ctx, const mpz_class& n) {
    return from_residues(ctx, std::vector<mpz_class>(ctx.size(), n));
}

ProductElement ProductElement::zero(const RingContext& ctx) { return diagonal(ctx, 0); }
ProductElement ProductElement::one(const RingContext& ctx) { return diagonal(ctx, 1); }

bool ProductElement::is_zero() const {
    for (const auto& c : components_)
        if (!c.is_zero()) return false;
    return true;
}

void ProductElement::require_same_context(const ProductElement& o) const {
    if (!(ctx_ == o.ctx_)) throw MixedContext();
}

ProductElement ProductElement::operator-() const {
    std::vector<PAdicInt> comps;
    comps.reserve(components_.size());
    for (const auto& c : components_) comps.push_back(-c);
    return ProductElement(ctx_, std::move(comps));
}

namespace {
template <typename Op>
ProductElement zip(const ProductElement& a, const ProductElement& b, Op op) {
    std::vector<PAdicInt> comps;
    comps.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        comps.push_back(op(a.component_at(i), b.component_at(i)));
    return ProductElement(a.context(), std::move(comps));
}
} // namespace

ProductElement operator+(const ProductElement& a, const ProductElement& b) {
    a.require_same_context(b);
    return zip(a, b, [](const PAdicInt& x, const PAdicInt& y) { return x + y; });
}

ProductElement operator-(const ProductElement& a, const ProductElement& b) {
    a.require_same_context(b);
    return zip(a, b, [](const PAdicInt& x, const PAdicInt& y) { return x - y; });
}

ProductElement operator*(const ProductElement& a, const ProductElement& b) {
    a.require_same_context(b);
    return zip(a, b, [](const PAdicInt& x, const PAdicInt& y) { return x * y; });
}

ProductElement ProductElement::inverse() const {
    std::vector<PAdicInt> comps;
    comps.reserve(components_.size());
    for (const auto& c : components_) comps.push_back(c.inverse());
    return ProductElement(ctx_, std::move(comps));
}

bool ProductElement::operator==(const ProductElement& o) const {
    return ctx_ == o.ctx_ && components_ == o.components_;
}

std::string ProductElement::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) out += ", ";
        out += components_[i].residue().get_str();
    }
    return out + ")";
}

// ---------------------------------------------------------------------------

Idempotent::Idempotent(RingContext context, PrimeSet support)
    : ctx_(std::move(context)), support_(std::move(support)) {
    std::sort(support_.begin(), support_.end());
    support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
    for (long p : support_)
        if (!ctx_.has_prime(p))
            throw std::invalid_argument("support prime " + std::to_string(p) +
                                        " not in context");
}

ProductElement Idempotent::element() const {
    std::vector<mpz_class> residues(ctx_.size(), 0);
    for (long p : support_) residues[ctx_.index_of(p)] = 1;
    return ProductElement::from_residues(ctx_, residues);
}

Idempotent Idempotent::complement() const {
    return Idempotent(ctx_, ps_difference(ctx_.primes(), support_));
}

Idempotent meet(const Idempotent& a, const Idempotent& b) {
    if (!(a.ctx_ == b.ctx_)) throw MixedContext();
    return Idempotent(a.ctx_, ps_intersection(a.support_, b.support_));
}

Idempotent join(const Idempotent& a, const Idempotent& b) {
    if (!(a.ctx_ == b.ctx_)) throw MixedContext();
    return Idempotent(a.ctx_, ps_union(a.support_, b.support_));
}

// ---------------------------------------------------------------------------

TruthSet truth_set(const ProductElement& f, Predicate predicate) {
    PrimeSet members;
    bool certain = true;
    const RingContext& ctx = f.context();
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        const PAdicInt& c = f.component_at(i);
        switch (predicate) {
            case Predicate::IsZero:
                if (c.is_zero()) {
                    members.push_back(ctx.prime_at(i));
                    certain = false;
                }
                break;
            case Predicate::InMaximal:
                if (!c.is_unit()) members.push_back(ctx.prime_at(i));
                break;
            case Predicate::IsUnit:
                if (c.is_unit()) members.push_back(ctx.prime_at(i));
                break;
        }
    }
    return TruthSet{predicate, std::move(members), certain};
}

bool is_unit(const ProductElement& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!f.component_at(i).is_unit()) return false;
    return true;
}

DivisionWitness division_witness(const ProductElement& f) {
    const RingContext& ctx = f.context();
    PrimeSet locus;
    std::vector<PAdicInt> comps;
    comps.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const PAdicInt& c = f.component_at(i);
        if (c.is_unit()) {
            comps.push_back(c.inverse());
        } else {
            locus.push_back(ctx.prime_at(i));
            comps.push_back(PAdicInt::zero(c.prime(), c.precision()));
        }
    }
    return DivisionWitness{ProductElement(ctx, std::move(comps)), std::move(locus)};
}

} // namespace zhat
