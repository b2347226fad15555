#pragma once

#include <compare>
#include <string_view>

#include "crossfam/core.hpp"

namespace crossfam {

/// Total orders on a layer of k-subsets.
///
///   lex       F < G iff min(F \ G) < min(G \ F)
///   colex     F < G iff max(F \ G) < max(G \ F)
///   revcolex  F < G iff min(F \ G) > min(G \ F)   (colex after e -> n+1-e)
enum class OrderKind { lex, colex, revcolex };

std::string_view to_string(OrderKind order);
/// Accepts "lex", "colex", "revcolex"; throws std::invalid_argument otherwise.
OrderKind parse_order(std::string_view text);

/// Initial segment descriptor: the first `size` sets of the layer `params`
/// under `order`.
struct SegmentSpec {
  OrderKind order = OrderKind::lex;
  Params params;
  Count size = 0;

  SegmentSpec() = default;
  /// Throws std::out_of_range unless size <= C(n, k).
  SegmentSpec(OrderKind order_, Params params_, Count size_);

  friend bool operator==(const SegmentSpec&, const SegmentSpec&) = default;
};

/// Throws std::invalid_argument if a and b live in different layers.
std::strong_ordering compare(const KSubset& a, const KSubset& b,
                             OrderKind order);

/// 0-based position of s in its layer under `order`.
Count rank(const KSubset& s, OrderKind order);

/// Inverse of rank. Throws std::out_of_range unless r < C(n, k).
KSubset unrank(Count r, OrderKind order, Params params);

/// The first spec.size sets under spec.order.
SetFamily initial_segment(const SegmentSpec& spec);

/// Image of s under the element reversal e -> n + 1 - e.
KSubset reflect(const KSubset& s);

/// Checks the two rank dualities used when compressing cross-intersecting
/// pairs, with N = C(n, a) and all ranks 0-based:
///
///   rank_revcolex(s)            = N - 1 - rank_lex(s)
///   rank_colex(complement(s))   = N - 1 - rank_colex(s)
///
/// The second identity is the colex form of "complementation reverses the
/// order"; together they give rank_revcolex(complement(s)) = rank_lex(s).
bool rank_duality_check(const KSubset& s);

}  // namespace crossfam
