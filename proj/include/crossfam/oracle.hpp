#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "crossfam/core.hpp"
#include "crossfam/verdict.hpp"

namespace crossfam {

/// Inclusive integer range.
struct IntRange {
  int lo = 0;
  int hi = -1;

  std::vector<int> values() const;
  bool contains(int v) const { return v >= lo && v <= hi; }
};

enum class SweepMode { exhaustive_families, segment_pairs, sampled };

/// Largest number of families an exhaustive check may enumerate. Defaults to
/// 2^20; the CROSSFAM_MAX_EXHAUSTIVE environment variable overrides it.
Count exhaustive_cap();

/// Upper bound on C(n, k) for segment-pair sweeps.
inline constexpr Count kSegmentPairsCap = 10'000;

struct SweepConfig {
  IntRange n_range;
  IntRange k_range;
  /// Values of the product-bound parameter i; all admissible values when unset.
  std::optional<std::vector<int>> i_values;
  /// Shadow level for Kruskal-Katona and Mors checks.
  std::optional<int> t;
  SweepMode mode = SweepMode::segment_pairs;
  std::uint64_t sample_count = 100'000;
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument if a point in range exceeds the mode's
  /// size limit: exhaustive_families needs 2^C(n,k) <= exhaustive_cap(),
  /// segment_pairs needs C(n,k) <= kSegmentPairsCap.
  void validate() const;
};

// ---------------------------------------------------------------------------
// Single parameter points. Segment checks go through compatibility_curve();
// family checks enumerate or sample actual families.

/// max over a of a * max_compatible_b(a) must equal C(n-1,k-1)^2.
Verdict check_pyber(int n, int k);

/// max product over lex segment pairs with |B| >= C(n-1,k-1)+C(n-i,k-i+1)
/// must equal thm2_bound().product_bound, attained at the extremal pair sizes.
Verdict check_thm2(int n, int k, int i);

/// Segments with |A| <= C(n-1,k-1) < |B|, against thm1_bound().
Verdict check_thm1_segments(int n, int k);

/// Every family B of C(n-1,k-1) k-sets with empty common intersection
/// leaves at most C(n-1,k-1) - C(n-k-1,k-1) sets meeting all of B.
/// Exhaustive; throws std::invalid_argument above exhaustive_cap().
Verdict check_thm1_boundary(int n, int k);

/// thm2_bound at i = k+1 against thm1_bound, for n > 2k, k >= 2.
Verdict check_thm1_consistency(int n, int k);

/// Hilton's Lemma on family pairs. exhaustive_families enumerates every
/// family A and every B compatible with it (explicitly for C(n,k) <= 10,
/// through the maximal compatible B above that); sampled draws
/// `samples` pairs.
Verdict check_hilton(int n, int k, SweepMode mode, std::uint64_t samples,
                     std::uint64_t seed);

/// Sum bound for cross-intersecting lex segments with both sizes
/// >= C(n-2, k-2). Meaningful for k >= 2.
Verdict check_prop1(int n, int k);
/// For each extremal segment pair with |B| > C(n-1,k-1), the neighbourhood
/// of B' = {B : 1 not in B} in build_prop1_graph() lies in C and |C| >= |B'|.
/// Observed is the number of violating pairs.
Verdict check_prop1_neighbourhood(int n, int k);
/// build_prop1_graph() is regular of degree C(n-k-1, k-1).
Verdict check_prop1_graph(int n, int k);

/// Sum bound over lex segment pairs with C(m-j,a-j) <= |A'| <= |B'|.
Verdict check_lemma7(int m, int a, int j);
/// Every block P_s has a matching into Q_s covering it; observed is the
/// total maximum-matching size, expected the total |P_s|.
Verdict check_lemma7_matchings(int m, int a, int j);

/// Kruskal-Katona, one verdict per family size m. Exhaustive: the minimum
/// t-shadow over all m-families equals the cascade value and the colex
/// segment attains it. Sampled: no sampled family goes below the cascade
/// value.
std::vector<Verdict> check_kk(int n, int k, int t, SweepMode mode,
                              std::uint64_t samples, std::uint64_t seed);

/// Minimum t-shadow over families of C(n-1,l) l-sets with full union,
/// against mors_bound(n, l, t). Exhaustive.
Verdict check_mors(int n, int l, int t);

/// check_proof_inequalities() as verdicts.
std::vector<Verdict> check_inequalities(int n, int k);

/// thm2_bound(n,k,i).product_bound is nondecreasing in i on [3, k+1].
Verdict check_thm2_monotone(int n, int k);

// ---------------------------------------------------------------------------
// Sweeps over a configuration's (n, k) grid, skipping points outside each
// claim's precondition.

std::vector<Verdict> sweep_pyber(const SweepConfig& cfg);
std::vector<Verdict> sweep_thm2(const SweepConfig& cfg);
/// Branch (ii) and the i = k+1 consistency for every point; branch (i)
/// where exhaustive enumeration fits.
std::vector<Verdict> sweep_thm1(const SweepConfig& cfg);
std::vector<Verdict> sweep_prop1(const SweepConfig& cfg);
/// n_range is m, k_range is a, i_values are j (kept within 1..a).
std::vector<Verdict> sweep_lemma7(const SweepConfig& cfg);
/// Kruskal-Katona at (n, k, t) and Mors at (n, l = k, t) for each point.
std::vector<Verdict> verify_kk_and_mors(const SweepConfig& cfg);

Verdict verify_hilton_exhaustive(int n, int k);
Verdict verify_prop1(int n, int k);
Verdict verify_lemma7(int m, int a, int j);

}  // namespace crossfam
