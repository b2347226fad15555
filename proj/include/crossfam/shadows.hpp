#pragma once

#include <cstdint>
#include <vector>

#include "crossfam/core.hpp"

namespace crossfam {

/// The t-subsets of [n] contained in at least one member of f.
///
/// t == k returns f. The empty family has an empty shadow for every t,
/// while a nonempty family has S^(0) = {empty set}.
/// Throws std::invalid_argument unless 0 <= t <= k.
SetFamily shadow(const SetFamily& f, int t);

/// Minimum t-shadow size over all families of m k-subsets of [n].
struct ShadowQuery {
  Params params;
  int t = 0;
  Count m = 0;

  ShadowQuery() = default;
  /// Throws std::invalid_argument unless 0 <= t <= k and m <= C(n, k).
  ShadowQuery(Params params_, int t_, Count m_);
};

/// One term C(top, level) of a cascade representation.
struct CascadeTerm {
  int top = 0;
  int level = 0;

  friend bool operator==(const CascadeTerm&, const CascadeTerm&) = default;
};

/// Greedy (Macaulay) representation
///   m = C(a_k, k) + C(a_{k-1}, k-1) + ... + C(a_s, s),  a_k > ... > a_s >= s >= 1.
/// Terms are listed from level k downward. Empty for m == 0.
std::vector<CascadeTerm> cascade(Count m, int k);

/// Exact Kruskal-Katona minimum |S^(t)(C^(k)(m))|, computed by materializing
/// the colex segment and expanding its shadow.
Count kk_min_shadow_segment(const ShadowQuery& q);

/// Same value from the cascade: sum over terms of C(a_j, j - (k - t)).
Count kk_min_shadow_cascade(const ShadowQuery& q);

/// Segment expansion up to kSegmentPathLimit sets, cascade above.
Count kk_min_shadow(const ShadowQuery& q);

inline constexpr Count kSegmentPathLimit = 1'000'000;

/// C(x, k) = x (x-1) ... (x-k+1) / k! for real x.
double real_binom(double x, int k);

/// The x >= k-1 with C(x, k) = m.
struct LovaszRoot {
  double x = 0.0;
  Count m = 0;
  int k = 0;
};

/// Tolerance on the root: |C(x, k) - m| <= max(1e-9 m, 1e-9).
inline constexpr double kLovaszTolerance = 1e-9;

/// Solves C(x, k) = m on the increasing branch x >= k-1 by bisection on
/// [k-1, k-1+m] followed by Newton polishing.
/// Throws std::invalid_argument for m < 0 or k < 1.
LovaszRoot lovasz_root(std::int64_t m, int k);

/// Real lower bound C(x, t) on the t-shadow of any m-family of k-sets, with
/// x = lovasz_root(m, k).x. The empty family gets 0.
double lovasz_bound(std::int64_t m, int k, int t);

/// C(n-1, t) + C(l-1, t-1): lower bound on the t-shadow of a family of
/// C(n-1, l) l-subsets of [n] whose union is [n].
/// Throws std::invalid_argument unless n >= l > t >= 1.
Count mors_bound(int n, int l, int t);

}  // namespace crossfam
