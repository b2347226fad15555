#pragma once

#include <utility>
#include <vector>

#include "crossfam/bipartite.hpp"
#include "crossfam/core.hpp"
#include "crossfam/orders.hpp"
#include "crossfam/verdict.hpp"

namespace crossfam {

// ---------------------------------------------------------------------------
// Predicates

/// Every A in a meets every B in b. The two families may have different
/// uniform sizes but must share the ground set (std::invalid_argument
/// otherwise). Vacuously true if either family is empty.
bool is_cross_intersecting(const SetFamily& a, const SetFamily& b);

/// No C in c and D in d have C | D = [n].
bool is_cross_union(const SetFamily& c, const SetFamily& d);

/// Replaces a cross-intersecting pair by the lex initial segments of the same
/// sizes, which are again cross-intersecting.
/// Throws std::invalid_argument if (a, b) is not cross-intersecting.
std::pair<SegmentSpec, SegmentSpec> hilton_compress(const SetFamily& a,
                                                    const SetFamily& b);

// ---------------------------------------------------------------------------
// Compatibility of lex segments

/// Largest b such that the lex segments L(a_size) and L(b) of k-subsets of
/// [n] are cross-intersecting.
///
/// Uses the complement criterion: L(a) and L(b) cross-intersect iff the
/// k-shadow of the complemented segment, itself a revcolex initial segment
/// of size kk_min_shadow(n, n-k -> k, b), fits into the last C(n,k) - a lex
/// positions. The shadow size is monotone in b, so a binary search finds
/// the threshold. Requires n >= 2k; throws std::invalid_argument otherwise
/// and std::out_of_range for a_size > C(n, k).
Count max_compatible_b(int n, int k, Count a_size);

/// Same quantity by materializing segments and testing pairs. Oracle only;
/// quadratic in C(n, k).
Count max_compatible_b_bruteforce(int n, int k, Count a_size);

/// max_compatible_b for every a in [0, C(n, k)], computed with one
/// monotone two-pointer pass.
std::vector<Count> compatibility_curve(int n, int k);

// ---------------------------------------------------------------------------
// Extremal constructions

/// The pair (A_i, B_i):
///   B_i = {B : 1 in B} | {B : 1 not in B, [2, i] subset B}
///   A_i = {A : 1 in A, A meets [2, i]}
struct ExtremalPair {
  int i = 0;
  SetFamily a_family;
  SetFamily b_family;
  Count a_size = 0;
  Count b_size = 0;
  /// Set when n == 2k, where the construction is still valid but the
  /// product bound has many other maximizers.
  bool boundary = false;
};

/// Throws std::invalid_argument unless 2 <= i <= k+1 and n >= 2k.
ExtremalPair build_extremal_pair(int n, int k, int i);

/// |A_i| = C(n-1, k-1) - C(n-i, k-1).
Count extremal_a_size(int n, int k, int i);
/// |B_i| = C(n-1, k-1) + C(n-i, k-i+1).
Count extremal_b_size(int n, int k, int i);

// ---------------------------------------------------------------------------
// Closed-form bounds. All exact; each throws std::invalid_argument when its
// parameter constraint fails.

/// C(n-1, k-1)^2, for n >= 2k > 0.
Count pyber_bound(int n, int k);

/// (C(n-1,k-1) + 1) (C(n-1,k-1) - C(n-k-1,k-1)), for n >= 2k > 0. The bound
/// is only claimed for n > 2k; at n = 2k it is the value thm2_bound takes at
/// i = k+1.
Count thm1_bound(int n, int k);

struct Thm2Bound {
  Count b_threshold = 0;
  Count product_bound = 0;

  friend bool operator==(const Thm2Bound&, const Thm2Bound&) = default;
};

/// b_threshold = C(n-1,k-1) + C(n-i,k-i+1),
/// product_bound = b_threshold (C(n-1,k-1) - C(n-i,k-1)),
/// for 3 <= i <= k+1 and n >= 2k > 0.
Thm2Bound thm2_bound(int n, int k, int i);

/// 2 C(n-1, k-1), for n >= 2k.
Count prop1_sum_bound(int n, int k);

/// C(m,a) + C(m-j,a-j) - C(m-j,a), for m >= 2a and j >= 1.
Count lemma7_bound(int m, int a, int j);

// ---------------------------------------------------------------------------
// Graphs and matchings

/// Disjointness graph between X_1 and X_2, where X_i holds the k-sets D with
/// D & {1, 2} = {i}. Regular of degree C(n-k-1, k-1). Requires n >= 2k, k >= 1.
BipartiteGraph build_prop1_graph(int n, int k);

/// One block of the decomposition of A_0 and B_0 over [m]:
///   P_s = {A in A_0 : [2, s] subset A, s+1 not in A}
///   Q_s = {B in B_0 : B & [2, s] empty, s+1 in B}
/// with A_0 = {A : 1 in A, [1, j] not subset A} and
///      B_0 = {B : 1 not in B, B meets [2, j]}.
struct Lemma7Block {
  int s = 0;
  SetFamily p;
  SetFamily q;
};

/// Blocks s = 1 .. j-1. Requires m >= 2a, a >= 1, j >= 2.
std::vector<Lemma7Block> build_lemma7_decomposition(int m, int a, int j);

/// Families A_0 and B_0 of the decomposition above.
std::pair<SetFamily, SetFamily> lemma7_parts(int m, int a, int j);

/// Maximum matching in the disjointness graph between p and q, as pairs.
std::vector<MatchedPair> maximum_disjoint_matching(const SetFamily& p,
                                                   const SetFamily& q);

/// A matching of p into q by disjoint pairs that covers all of p.
/// Throws std::domain_error if no such matching exists.
std::vector<MatchedPair> find_block_matching(const SetFamily& p,
                                             const SetFamily& q);

// ---------------------------------------------------------------------------
// Binomial inequalities used in the product-bound proofs

/// Exact evaluations, one report per instance, for n >= 2k > 0:
///   ratio_step      C(n-i,k-i) C(n,k) < C(n-i+1,k-i+1) C(n-1,k-1), 2 <= i <= k
///   star_gap        C(n-2,l) C(n-2,l-1) < C(n-1,l) C(n-3,l-1)         (k >= 2)
///   tail_ratio      C(x,l-2) C(n-2,l) <= C(x,k-2) C(n-1,l),
///                   l-2 <= x <= n-3                                  (k >= 2)
///   split_first     C(n-4,l-1) C(n-1,l) <= C(n-3,l-1) C(n-2,l)        (k >= 2)
///   split_second    C(n-4,l-1) C(n-2,l-1) <= C(n-3,l-1)^2             (k >= 2)
///   split_product   (C(n-2,l)+C(n-4,l-1)) (C(n-1,l)+C(n-2,l-1))
///                   <= (C(n-1,l)+C(n-3,l-1)) (C(n-2,l)+C(n-3,l-1))   (k >= 2)
///   log_concavity   C(m-1,b) C(m+1,b) <= C(m,b)^2 for b in {k, l-1},
///                   b+1 <= m <= n
/// with l = n - k. The star_gap report carries the quantity
/// f = C(n-1,l) (C(n-2,l) + C(n-3,l-1)) as parameter "f".
std::vector<BoundReport> check_proof_inequalities(int n, int k);

}  // namespace crossfam
