#include "crossfam/verdict.hpp"

#include <stdexcept>
#include <string>

namespace crossfam {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::less:
      return "<";
    case Relation::less_equal:
      return "<=";
    case Relation::equal:
      return "=";
    case Relation::greater_equal:
      return ">=";
  }
  return "?";
}

Relation parse_relation(std::string_view text) {
  if (text == "<") return Relation::less;
  if (text == "<=") return Relation::less_equal;
  if (text == "=") return Relation::equal;
  if (text == ">=") return Relation::greater_equal;
  throw std::invalid_argument("unknown relation '" + std::string(text) + "'");
}

bool relation_holds(Count observed, Relation r, Count expected) {
  switch (r) {
    case Relation::less:
      return observed < expected;
    case Relation::less_equal:
      return observed <= expected;
    case Relation::equal:
      return observed == expected;
    case Relation::greater_equal:
      return observed >= expected;
  }
  return false;
}

std::string_view to_string(BoundVerdict v) {
  switch (v) {
    case BoundVerdict::holds:
      return "holds";
    case BoundVerdict::fails:
      return "fails";
    case BoundVerdict::attained:
      return "attained";
  }
  return "?";
}

std::optional<std::int64_t> BoundReport::parameter(std::string_view name) const {
  for (const auto& [key, value] : parameters) {
    if (key == name) return value;
  }
  return std::nullopt;
}

BoundReport make_bound_report(
    std::string name,
    std::vector<std::pair<std::string, std::int64_t>> parameters,
    Count observed, Relation relation, Count bound_value) {
  BoundReport r;
  r.bound_name = std::move(name);
  r.parameters = std::move(parameters);
  r.bound_value = bound_value;
  r.observed = observed;
  r.relation = relation;
  if (!relation_holds(observed, relation, bound_value)) {
    r.verdict = BoundVerdict::fails;
  } else if (observed == bound_value) {
    r.verdict = BoundVerdict::attained;
  } else {
    r.verdict = BoundVerdict::holds;
  }
  return r;
}

Verdict verdict_from_bound_report(const BoundReport& report, int n, int k) {
  Verdict v;
  v.claim = report.bound_name;
  v.n = n;
  v.k = k;
  if (auto i = report.parameter("i")) v.i = static_cast<int>(*i);
  v.expected = report.bound_value;
  v.observed = report.observed;
  v.relation = report.relation;
  v.attained_at = report.attained_at;
  v.passed = report.verdict != BoundVerdict::fails;
  for (const auto& [key, value] : report.parameters) {
    if (key == "n" || key == "k" || key == "i") continue;
    if (!v.note.empty()) v.note += ' ';
    v.note += key + "=" + std::to_string(value);
  }
  return v;
}

}  // namespace crossfam
