#include "crossfam/cross_families.hpp"

#include <stdexcept>
#include <string>

#include "crossfam/shadows.hpp"

namespace crossfam {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

void require_same_ground(const SetFamily& a, const SetFamily& b) {
  if (a.params().n != b.params().n) {
    throw std::invalid_argument("families live on different ground sets");
  }
}

// Mask of the interval [lo, hi] of elements; empty when lo > hi.
Mask interval(int lo, int hi) {
  if (lo > hi) return 0;
  return ground_mask(hi) & ~ground_mask(lo - 1);
}

// Size of the k-shadow of the complemented lex segment L(b): a revcolex
// initial segment of (n-k)-sets whose shadow size equals the colex minimum.
Count complement_shadow_size(int n, int k, Count b) {
  return kk_min_shadow_cascade(ShadowQuery(Params(n, n - k), k, b));
}

std::vector<Mask> lex_segment_masks(Params p, Count size) {
  std::vector<Mask> out;
  out.reserve(static_cast<std::size_t>(size));
  for (Count r = 0; r < size; ++r) {
    out.push_back(unrank(r, OrderKind::lex, p).mask());
  }
  return out;
}

}  // namespace

bool is_cross_intersecting(const SetFamily& a, const SetFamily& b) {
  require_same_ground(a, b);
  for (Mask x : a.masks()) {
    for (Mask y : b.masks()) {
      if ((x & y) == 0) return false;
    }
  }
  return true;
}

bool is_cross_union(const SetFamily& c, const SetFamily& d) {
  require_same_ground(c, d);
  const Mask ground = ground_mask(c.params().n);
  for (Mask x : c.masks()) {
    for (Mask y : d.masks()) {
      if ((x | y) == ground) return false;
    }
  }
  return true;
}

std::pair<SegmentSpec, SegmentSpec> hilton_compress(const SetFamily& a,
                                                    const SetFamily& b) {
  if (!is_cross_intersecting(a, b)) {
    throw std::invalid_argument("hilton_compress: pair is not cross-intersecting");
  }
  return {SegmentSpec(OrderKind::lex, a.params(), a.size()),
          SegmentSpec(OrderKind::lex, b.params(), b.size())};
}

Count max_compatible_b(int n, int k, Count a_size) {
  const Params p(n, k);
  require(n >= 2 * k, "max_compatible_b: requires n >= 2k");
  const Count total = p.layer_size();
  if (a_size > total) throw std::out_of_range("max_compatible_b: a_size > C(n, k)");
  const Count room = total - a_size;
  // Largest b in [0, total] with complement_shadow_size(b) <= room.
  Count lo = 0;
  Count hi = total;
  while (lo < hi) {
    const Count mid = lo + (hi - lo + 1) / 2;
    if (complement_shadow_size(n, k, mid) <= room) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

Count max_compatible_b_bruteforce(int n, int k, Count a_size) {
  const Params p(n, k);
  const Count total = p.layer_size();
  if (a_size > total) throw std::out_of_range("max_compatible_b: a_size > C(n, k)");
  const std::vector<Mask> a = lex_segment_masks(p, a_size);
  // L(b) works iff each of its members meets all of L(a); the answer is the
  // lex position of the first set that misses some member.
  for (Count r = 0; r < total; ++r) {
    const Mask candidate = unrank(r, OrderKind::lex, p).mask();
    for (Mask x : a) {
      if ((x & candidate) == 0) return r;
    }
  }
  return total;
}

std::vector<Count> compatibility_curve(int n, int k) {
  const Params p(n, k);
  require(n >= 2 * k, "compatibility_curve: requires n >= 2k");
  const Count total = p.layer_size();
  std::vector<Count> curve(static_cast<std::size_t>(total) + 1);
  Count b = total;
  for (Count a = 0; a <= total; ++a) {
    while (complement_shadow_size(n, k, b) > total - a) --b;
    curve[static_cast<std::size_t>(a)] = b;
  }
  return curve;
}

Count extremal_a_size(int n, int k, int i) {
  return binom(n - 1, k - 1) - binom(n - i, k - 1);
}

Count extremal_b_size(int n, int k, int i) {
  return checked_add(binom(n - 1, k - 1), binom(n - i, k - i + 1));
}

ExtremalPair build_extremal_pair(int n, int k, int i) {
  const Params p(n, k);
  require(k >= 1 && n >= 2 * k, "build_extremal_pair: requires n >= 2k > 0");
  if (i < 2 || i > k + 1) {
    throw std::invalid_argument("build_extremal_pair: i=" + std::to_string(i) +
                                " outside [2, k+1]");
  }
  const Mask one = element_bit(1);
  const Mask head = interval(2, i);
  std::vector<Mask> a;
  std::vector<Mask> b;
  for_each_k_subset(n, k, [&](Mask s) {
    const bool has_one = (s & one) != 0;
    if (has_one && (s & head) != 0) a.push_back(s);
    if (has_one || (s & head) == head) b.push_back(s);
  });
  ExtremalPair pair;
  pair.i = i;
  pair.a_family = SetFamily::from_masks(p, std::move(a));
  pair.b_family = SetFamily::from_masks(p, std::move(b));
  pair.a_size = pair.a_family.size();
  pair.b_size = pair.b_family.size();
  pair.boundary = n == 2 * k;
  return pair;
}

Count pyber_bound(int n, int k) {
  require(k > 0 && n >= 2 * k, "pyber_bound: requires n >= 2k > 0");
  const Count star = binom(n - 1, k - 1);
  return checked_mul(star, star);
}

Count thm1_bound(int n, int k) {
  require(k > 0 && n >= 2 * k, "thm1_bound: requires n >= 2k > 0");
  const Count star = binom(n - 1, k - 1);
  return checked_mul(star + 1, star - binom(n - k - 1, k - 1));
}

Thm2Bound thm2_bound(int n, int k, int i) {
  require(k > 0 && n >= 2 * k, "thm2_bound: requires n >= 2k > 0");
  if (i < 3 || i > k + 1) {
    throw std::invalid_argument("thm2_bound: i=" + std::to_string(i) +
                                " outside [3, k+1]");
  }
  const Count threshold = extremal_b_size(n, k, i);
  return {threshold, checked_mul(threshold, extremal_a_size(n, k, i))};
}

Count prop1_sum_bound(int n, int k) {
  require(k >= 0 && n >= 2 * k, "prop1_sum_bound: requires n >= 2k");
  return checked_mul(2, binom(n - 1, k - 1));
}

Count lemma7_bound(int m, int a, int j) {
  require(a >= 0 && m >= 2 * a, "lemma7_bound: requires m >= 2a");
  require(j >= 1, "lemma7_bound: requires j >= 1");
  return checked_add(binom(m, a), binom(m - j, a - j)) - binom(m - j, a);
}

BipartiteGraph build_prop1_graph(int n, int k) {
  const Params p(n, k);
  require(k >= 1 && n >= 2 * k, "build_prop1_graph: requires n >= 2k > 0");
  const Mask one = element_bit(1);
  const Mask two = element_bit(2);
  std::vector<Mask> x1;
  std::vector<Mask> x2;
  for_each_k_subset(n, k, [&](Mask s) {
    const Mask head = s & (one | two);
    if (head == one) x1.push_back(s);
    if (head == two) x2.push_back(s);
  });
  return BipartiteGraph::disjointness(SetFamily::from_masks(p, std::move(x1)),
                                      SetFamily::from_masks(p, std::move(x2)));
}

std::pair<SetFamily, SetFamily> lemma7_parts(int m, int a, int j) {
  const Params p(m, a);
  require(a >= 1 && m >= 2 * a, "lemma7: requires m >= 2a > 0");
  require(j >= 2 && j <= m, "lemma7: requires 2 <= j <= m");
  const Mask one = element_bit(1);
  const Mask first_j = interval(1, j);
  const Mask rest = interval(2, j);
  std::vector<Mask> a0;
  std::vector<Mask> b0;
  for_each_k_subset(m, a, [&](Mask s) {
    if ((s & one) != 0) {
      if ((s & first_j) != first_j) a0.push_back(s);
    } else if ((s & rest) != 0) {
      b0.push_back(s);
    }
  });
  return {SetFamily::from_masks(p, std::move(a0)),
          SetFamily::from_masks(p, std::move(b0))};
}

std::vector<Lemma7Block> build_lemma7_decomposition(int m, int a, int j) {
  const auto [a0, b0] = lemma7_parts(m, a, j);
  const Params p(m, a);
  std::vector<Lemma7Block> blocks;
  for (int s = 1; s <= j - 1; ++s) {
    const Mask prefix = interval(2, s);
    const Mask next = element_bit(s + 1);
    std::vector<Mask> ps;
    std::vector<Mask> qs;
    for (Mask x : a0.masks()) {
      if ((x & prefix) == prefix && (x & next) == 0) ps.push_back(x);
    }
    for (Mask y : b0.masks()) {
      if ((y & prefix) == 0 && (y & next) != 0) qs.push_back(y);
    }
    blocks.push_back({s, SetFamily::from_masks(p, std::move(ps)),
                      SetFamily::from_masks(p, std::move(qs))});
  }
  return blocks;
}

std::vector<MatchedPair> maximum_disjoint_matching(const SetFamily& p,
                                                   const SetFamily& q) {
  const BipartiteGraph g = BipartiteGraph::disjointness(p, q);
  const std::vector<int> match = maximum_matching(g);
  const int n = p.params().n;
  std::vector<MatchedPair> out;
  for (std::size_t u = 0; u < match.size(); ++u) {
    if (match[u] < 0) continue;
    out.push_back({KSubset::from_mask(n, p.masks()[u]),
                   KSubset::from_mask(n, q.masks()[static_cast<std::size_t>(match[u])])});
  }
  return out;
}

std::vector<MatchedPair> find_block_matching(const SetFamily& p,
                                             const SetFamily& q) {
  std::vector<MatchedPair> matching = maximum_disjoint_matching(p, q);
  if (matching.size() != p.size()) {
    throw std::domain_error("no matching saturates the smaller block: maximum " +
                            std::to_string(matching.size()) + " of " +
                            std::to_string(p.size()));
  }
  return matching;
}

std::vector<BoundReport> check_proof_inequalities(int n, int k) {
  require(k > 0 && n >= 2 * k, "check_proof_inequalities: requires n >= 2k > 0");
  const int l = n - k;
  std::vector<BoundReport> out;
  auto C = [](std::int64_t m, std::int64_t b) { return binom(m, b); };

  for (int i = 2; i <= k; ++i) {
    out.push_back(make_bound_report(
        "ratio_step", {{"n", n}, {"k", k}, {"i", i}},
        checked_mul(C(n - i, k - i), C(n, k)), Relation::less,
        checked_mul(C(n - i + 1, k - i + 1), C(n - 1, k - 1))));
  }

  if (k >= 2) {
    const Count f = checked_mul(C(n - 1, l), C(n - 2, l) + C(n - 3, l - 1));
    out.push_back(make_bound_report(
        "star_gap", {{"n", n}, {"k", k}, {"f", static_cast<std::int64_t>(f)}},
        checked_mul(C(n - 2, l), C(n - 2, l - 1)), Relation::less,
        checked_mul(C(n - 1, l), C(n - 3, l - 1))));

    for (int x = l - 2; x <= n - 3; ++x) {
      out.push_back(make_bound_report(
          "tail_ratio", {{"n", n}, {"k", k}, {"x", x}},
          checked_mul(C(x, l - 2), C(n - 2, l)), Relation::less_equal,
          checked_mul(C(x, k - 2), C(n - 1, l))));
    }

    out.push_back(make_bound_report(
        "split_first", {{"n", n}, {"k", k}},
        checked_mul(C(n - 4, l - 1), C(n - 1, l)), Relation::less_equal,
        checked_mul(C(n - 3, l - 1), C(n - 2, l))));
    out.push_back(make_bound_report(
        "split_second", {{"n", n}, {"k", k}},
        checked_mul(C(n - 4, l - 1), C(n - 2, l - 1)), Relation::less_equal,
        checked_mul(C(n - 3, l - 1), C(n - 3, l - 1))));
    out.push_back(make_bound_report(
        "split_product", {{"n", n}, {"k", k}},
        checked_mul(C(n - 2, l) + C(n - 4, l - 1), C(n - 1, l) + C(n - 2, l - 1)),
        Relation::less_equal,
        checked_mul(C(n - 1, l) + C(n - 3, l - 1), C(n - 2, l) + C(n - 3, l - 1))));
  }

  std::vector<int> levels{k};
  if (l - 1 != k && l - 1 >= 1) levels.push_back(l - 1);
  for (int b : levels) {
    for (int m = b + 1; m <= n; ++m) {
      out.push_back(make_bound_report(
          "log_concavity", {{"n", n}, {"k", k}, {"m", m}, {"b", b}},
          checked_mul(C(m - 1, b), C(m + 1, b)), Relation::less_equal,
          checked_mul(C(m, b), C(m, b))));
    }
  }
  return out;
}

}  // namespace crossfam
