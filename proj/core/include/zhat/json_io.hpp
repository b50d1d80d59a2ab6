#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zhat/adele.hpp"
#include "zhat/asymptotic.hpp"
#include "zhat/filters.hpp"
#include "zhat/ideal.hpp"
#include "zhat/product.hpp"
#include "zhat/sheaf.hpp"
#include "zhat/spectrum.hpp"

namespace zhat {

// Serialization of the wire formats.  Residues travel as decimal strings
// under a {"p": ..., "N": ...} context header; rationals as {"exp", "unit"}.
// Parsing throws ParseError naming the offending field.

std::string to_json(const RingContext& ctx);
std::string to_json(const PAdicInt& a);
std::string to_json(const PAdicRational& a);
std::string to_json(const ProductElement& f);
std::string to_json(const TruthSet& t);
std::string to_json(const Filter& f);
std::string to_json(const Ultrafilter& u);
std::string to_json(const FinGenIdeal& ideal);
std::string to_json(const PrimeIdeal& p);
std::string spec_listing_json(const std::vector<PrimeIdeal>& points);
std::string to_json(const OpenSet& u);
std::string to_json(const SectionRing& ring);
std::string to_json(const AdeleElement& a);
std::string to_json(const AsymptoticNat& x);
std::string to_json(const ConvexSubsemigroup& d);

RingContext context_from_json(const std::string& text);

/// Accepts {"context": ..., "components": [...]} or a bare component array
/// resolved against `fallback`.
ProductElement element_from_json(const std::string& text,
                                 const std::optional<RingContext>& fallback);

std::vector<ProductElement> generators_from_json(const std::string& text,
                                                 const std::optional<RingContext>& fallback);

PrimeIdeal prime_from_json(const std::string& text, const RingContext& ctx);
OpenSet open_set_from_json(const std::string& text, const RingContext& ctx);
AdeleElement adele_from_json(const std::string& text,
                             const std::optional<RingContext>& fallback);
AsymptoticNat asymptotic_from_json(const std::string& text);

} // namespace zhat
