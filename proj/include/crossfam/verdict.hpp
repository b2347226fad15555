#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crossfam/core.hpp"

namespace crossfam {

/// Direction in which an observed value must stand against the expected one.
enum class Relation { less, less_equal, equal, greater_equal };

std::string_view to_string(Relation r);
Relation parse_relation(std::string_view text);
bool relation_holds(Count observed, Relation r, Count expected);

/// A pair of family sizes (|A|, |B|).
using SizePair = std::pair<Count, Count>;

enum class BoundVerdict { holds, fails, attained };

std::string_view to_string(BoundVerdict v);

/// One exact evaluation of a closed-form bound or proof inequality:
/// `observed relation bound_value`.
struct BoundReport {
  std::string bound_name;
  /// Named integer parameters, e.g. {"n", 6}, {"k", 3}, {"i", 2}.
  std::vector<std::pair<std::string, std::int64_t>> parameters;
  Count bound_value = 0;
  Count observed = 0;
  Relation relation = Relation::less_equal;
  std::vector<SizePair> attained_at;
  BoundVerdict verdict = BoundVerdict::holds;

  std::optional<std::int64_t> parameter(std::string_view name) const;
};

/// Builds a report and sets its verdict: fails if the relation is violated,
/// attained if it holds with equality, holds otherwise.
BoundReport make_bound_report(
    std::string name,
    std::vector<std::pair<std::string, std::int64_t>> parameters,
    Count observed, Relation relation, Count bound_value);

/// Outcome of one oracle check at one parameter point.
///
/// passed is true exactly when `observed relation expected` holds and, for
/// claims that also require a specific attaining configuration, that
/// configuration was found.
struct Verdict {
  std::string claim;
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> i;
  std::optional<int> t;
  Count expected = 0;
  Count observed = 0;
  Relation relation = Relation::equal;
  std::vector<SizePair> attained_at;
  bool passed = false;
  std::optional<std::uint64_t> seed;
  /// Free-form context ("exhaustive", "branch=ii", ...). Not part of equality
  /// of numeric content.
  std::string note;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

Verdict verdict_from_bound_report(const BoundReport& report, int n, int k);

}  // namespace crossfam
