#include "crossfam/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "crossfam/cross_families.hpp"
#include "crossfam/orders.hpp"
#include "crossfam/shadows.hpp"

namespace crossfam {

namespace {

constexpr Count kDefaultExhaustiveCap = Count{1} << 20;

// Layer members in colex (numeric) order.
std::vector<Mask> layer_masks(int n, int k) {
  std::vector<Mask> out;
  for_each_k_subset(n, k, [&](Mask m) { out.push_back(m); });
  return out;
}

// Entry i has bit j set iff layer[i] and layer[j] are disjoint.
std::vector<Mask> disjointness_rows(const std::vector<Mask>& layer) {
  std::vector<Mask> rows(layer.size(), 0);
  for (std::size_t i = 0; i < layer.size(); ++i) {
    for (std::size_t j = 0; j < layer.size(); ++j) {
      if ((layer[i] & layer[j]) == 0) rows[i] |= Mask{1} << j;
    }
  }
  return rows;
}

// Entry i is the set of indices (into the t-layer) of t-subsets of layer[i].
std::vector<Mask> shadow_rows(const std::vector<Mask>& layer, int n, int t) {
  const std::vector<Mask> lower = layer_masks(n, t);
  if (lower.size() > 64) {
    throw std::invalid_argument("exhaustive shadow check needs C(n, t) <= 64");
  }
  std::unordered_map<Mask, int> index;
  for (std::size_t i = 0; i < lower.size(); ++i) index[lower[i]] = static_cast<int>(i);
  std::vector<Mask> rows(layer.size(), 0);
  for (std::size_t i = 0; i < layer.size(); ++i) {
    for_each_sub_k_subset(layer[i], t, [&](Mask sub) {
      rows[i] |= Mask{1} << index.at(sub);
    });
  }
  return rows;
}

// OR (or AND) of rows selected by the bits of `pick`.
Mask or_rows(const std::vector<Mask>& rows, Mask pick) {
  Mask acc = 0;
  for (; pick != 0; pick &= pick - 1) acc |= rows[std::countr_zero(pick)];
  return acc;
}

Mask and_rows(const std::vector<Mask>& rows, Mask pick, Mask start) {
  Mask acc = start;
  for (; pick != 0; pick &= pick - 1) acc &= rows[std::countr_zero(pick)];
  return acc;
}

// Number of size-`size` subsets of a `width`-element layer, saturating.
Count family_count(Count width, Count size) {
  try {
    return binom(static_cast<std::int64_t>(width), static_cast<std::int64_t>(size));
  } catch (const std::overflow_error&) {
    return std::numeric_limits<Count>::max();
  }
}

void require_exhaustive(Count families, const std::string& what) {
  if (families > exhaustive_cap()) {
    throw std::invalid_argument(what + ": " + std::to_string(families) +
                                " families exceed the exhaustive cap " +
                                std::to_string(exhaustive_cap()));
  }
}

Count power_of_two_or_max(Count exponent) {
  return exponent >= 64 ? std::numeric_limits<Count>::max() : Count{1} << exponent;
}

Verdict base_verdict(std::string claim, int n, int k) {
  Verdict v;
  v.claim = std::move(claim);
  v.n = n;
  v.k = k;
  return v;
}

void finish(Verdict& v) {
  v.passed = relation_holds(v.observed, v.relation, v.expected);
}

}  // namespace

std::vector<int> IntRange::values() const {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

Count exhaustive_cap() {
  if (const char* env = std::getenv("CROSSFAM_MAX_EXHAUSTIVE")) {
    try {
      std::size_t used = 0;
      const std::string text(env);
      const unsigned long long v = std::stoull(text, &used);
      if (used == text.size() && v > 0) return v;
    } catch (const std::logic_error&) {
    }
  }
  return kDefaultExhaustiveCap;
}

void SweepConfig::validate() const {
  if (n_range.lo > n_range.hi || k_range.lo > k_range.hi) {
    throw std::invalid_argument("empty parameter range");
  }
  if (n_range.lo < 1 || n_range.hi > kMaxGround || k_range.lo < 0) {
    throw std::invalid_argument("parameters outside 1 <= n <= 64, k >= 0");
  }
  if (mode == SweepMode::sampled && sample_count == 0) {
    throw std::invalid_argument("sampled mode needs a positive sample count");
  }
  for (int n : n_range.values()) {
    for (int k : k_range.values()) {
      if (k > n) continue;
      const Count layer = binom(n, k);
      if (mode == SweepMode::exhaustive_families &&
          power_of_two_or_max(layer) > exhaustive_cap()) {
        throw std::invalid_argument(
            "exhaustive mode at n=" + std::to_string(n) + ", k=" +
            std::to_string(k) + " needs 2^" + std::to_string(layer) +
            " families, above the cap " + std::to_string(exhaustive_cap()));
      }
      if (mode == SweepMode::segment_pairs && layer > kSegmentPairsCap) {
        throw std::invalid_argument("segment sweep at n=" + std::to_string(n) +
                                    ", k=" + std::to_string(k) +
                                    " exceeds C(n,k) <= 10^4");
      }
    }
  }
}

Verdict check_pyber(int n, int k) {
  Verdict v = base_verdict("pyber", n, k);
  v.expected = pyber_bound(n, k);
  v.relation = Relation::equal;
  const std::vector<Count> curve = compatibility_curve(n, k);
  Count best = 0;
  for (Count a = 0; a < curve.size(); ++a) {
    const Count product = checked_mul(a, curve[a]);
    if (product > best) {
      best = product;
      v.attained_at.clear();
    }
    if (product == best) v.attained_at.emplace_back(a, curve[a]);
  }
  v.observed = best;
  if (n == 2 * k) v.note = "boundary n=2k";
  finish(v);
  return v;
}

Verdict check_thm2(int n, int k, int i) {
  Verdict v = base_verdict("thm2", n, k);
  v.i = i;
  const Thm2Bound bound = thm2_bound(n, k, i);
  v.expected = bound.product_bound;
  v.relation = Relation::equal;
  const std::vector<Count> curve = compatibility_curve(n, k);
  Count best = 0;
  for (Count b = bound.b_threshold; b < curve.size(); ++b) {
    const Count product = checked_mul(curve[b], b);
    if (product > best) {
      best = product;
      v.attained_at.clear();
    }
    if (product == best && product > 0) v.attained_at.emplace_back(curve[b], b);
  }
  v.observed = best;
  const SizePair example{extremal_a_size(n, k, i), extremal_b_size(n, k, i)};
  const bool example_attained =
      std::find(v.attained_at.begin(), v.attained_at.end(), example) !=
      v.attained_at.end();
  v.note = "example (" + std::to_string(example.first) + "," +
           std::to_string(example.second) + ")" +
           (example_attained ? " attained" : " NOT attained");
  if (n == 2 * k) v.note += "; boundary n=2k";
  finish(v);
  v.passed = v.passed && example_attained;
  return v;
}

Verdict check_thm1_segments(int n, int k) {
  Verdict v = base_verdict("thm1", n, k);
  v.expected = thm1_bound(n, k);
  v.relation = Relation::equal;
  const Count star = binom(n - 1, k - 1);
  const std::vector<Count> curve = compatibility_curve(n, k);
  Count best = 0;
  for (Count b = star + 1; b < curve.size(); ++b) {
    const Count a = std::min(curve[b], star);
    const Count product = checked_mul(a, b);
    if (product > best) {
      best = product;
      v.attained_at.clear();
    }
    if (product == best && product > 0) v.attained_at.emplace_back(a, b);
  }
  v.observed = best;
  v.note = "branch=ii segments |B| > C(n-1,k-1)";
  finish(v);
  return v;
}

Verdict check_thm1_boundary(int n, int k) {
  if (!(k > 0 && n > 2 * k)) {
    throw std::invalid_argument("thm1 boundary: requires n > 2k > 0");
  }
  Verdict v = base_verdict("thm1.boundary", n, k);
  const Count star = binom(n - 1, k - 1);
  v.expected = star - binom(n - k - 1, k - 1);
  v.relation = Relation::less_equal;
  const std::vector<Mask> layer = layer_masks(n, k);
  if (layer.size() > 64) {
    throw std::invalid_argument("thm1 boundary: layer larger than 64 sets");
  }
  require_exhaustive(family_count(layer.size(), star), "thm1 boundary");
  const std::vector<Mask> disjoint = disjointness_rows(layer);
  const Mask ground = ground_mask(n);
  Count best = 0;
  Count examined = 0;
  for_each_k_subset(static_cast<int>(layer.size()), static_cast<int>(star),
                    [&](Mask pick) {
                      if (and_rows(layer, pick, ground) != 0) return;
                      ++examined;
                      const Count a = layer.size() - std::popcount(or_rows(disjoint, pick));
                      best = std::max(best, a);
                    });
  v.observed = best;
  if (examined == 0) {
    v.note = "branch=i no family with empty intersection";
    finish(v);
    return v;
  }
  const bool strict = checked_mul(best, star) < thm1_bound(n, k);
  v.note = "branch=i exhaustive families=" + std::to_string(examined) +
           (strict ? " product strictly below bound" : " product NOT below bound");
  finish(v);
  v.passed = v.passed && strict;
  return v;
}

Verdict check_thm1_consistency(int n, int k) {
  Verdict v = base_verdict("thm1.consistency", n, k);
  v.i = k + 1;
  v.expected = thm1_bound(n, k);
  v.observed = thm2_bound(n, k, k + 1).product_bound;
  v.relation = Relation::equal;
  finish(v);
  return v;
}

Verdict check_hilton(int n, int k, SweepMode mode, std::uint64_t samples,
                     std::uint64_t seed) {
  Verdict v = base_verdict("hilton", n, k);
  v.expected = 0;
  v.relation = Relation::equal;
  const std::vector<Mask> layer = layer_masks(n, k);
  const Count total = layer.size();
  if (total > 64) throw std::invalid_argument("hilton: layer larger than 64 sets");
  const std::vector<Mask> disjoint = disjointness_rows(layer);
  const Mask all = ground_mask(static_cast<int>(total));

  // Segment compatibility from direct pairwise checks.
  std::vector<Count> segment_limit(total + 1);
  for (Count a = 0; a <= total; ++a) {
    segment_limit[a] = max_compatible_b_bruteforce(n, k, a);
  }
  auto segments_ok = [&](Count a, Count b) { return b <= segment_limit[a]; };

  Count pairs = 0;
  Count violations = 0;
  if (mode == SweepMode::sampled) {
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
      const Mask a = rng() & all;
      const Mask allowed = all & ~or_rows(disjoint, a);
      const Mask b = rng() & allowed;
      ++pairs;
      if (!segments_ok(std::popcount(a), std::popcount(b))) ++violations;
    }
    v.seed = seed;
    v.note = "sampled pairs=" + std::to_string(pairs);
  } else {
    require_exhaustive(power_of_two_or_max(total), "hilton");
    const bool explicit_pairs = total <= 10;
    for (Mask a = 0;; ++a) {
      const Mask allowed = all & ~or_rows(disjoint, a);
      const Count a_size = std::popcount(a);
      if (explicit_pairs) {
        for (Mask b = allowed;; b = (b - 1) & allowed) {
          ++pairs;
          if (!segments_ok(a_size, std::popcount(b))) ++violations;
          if (b == 0) break;
        }
      } else {
        // Every compatible B is a subset of `allowed`, and segment
        // compatibility is downward closed in |B|.
        ++pairs;
        if (!segments_ok(a_size, std::popcount(allowed))) ++violations;
      }
      if (a == all) break;
    }
    v.note = explicit_pairs ? "exhaustive pairs=" + std::to_string(pairs)
                            : "exhaustive families=" + std::to_string(pairs) +
                                  " via maximal compatible B";
  }
  v.observed = violations;
  finish(v);
  return v;
}

Verdict check_prop1(int n, int k) {
  Verdict v = base_verdict("prop1", n, k);
  v.expected = prop1_sum_bound(n, k);
  v.relation = Relation::less_equal;
  const Count lo = binom(n - 2, k - 2);
  const std::vector<Count> curve = compatibility_curve(n, k);
  Count best = 0;
  for (Count a = lo; a < curve.size(); ++a) {
    const Count b = curve[a];
    if (b < lo) continue;
    const Count sum = a + b;
    if (sum > best) {
      best = sum;
      v.attained_at.clear();
    }
    if (sum == best) v.attained_at.emplace_back(a, b);
  }
  v.observed = best;
  finish(v);
  return v;
}

Verdict check_prop1_neighbourhood(int n, int k) {
  Verdict v = base_verdict("prop1.neighbourhood", n, k);
  v.expected = 0;
  v.relation = Relation::equal;
  const Params p(n, k);
  const Count star = binom(n - 1, k - 1);
  const Count lo = binom(n - 2, k - 2);
  const std::vector<Count> curve = compatibility_curve(n, k);
  const BipartiteGraph graph = build_prop1_graph(n, k);
  const auto x1 = graph.left().masks();
  const auto x2 = graph.right().masks();

  // Right-to-left adjacency.
  std::vector<std::vector<std::size_t>> from_right(x2.size());
  for (const auto& [u, w] : graph.edges()) from_right[w].push_back(u);

  const Mask one = element_bit(1);
  const Mask two = element_bit(2);
  auto lex_rank = [&](Mask m) { return rank(KSubset::from_mask(n, m), OrderKind::lex); };

  Count checked = 0;
  Count violations = 0;
  for (Count a = lo; a < curve.size(); ++a) {
    const Count b = curve[a];
    if (b <= star || a > b) continue;
    ++checked;
    bool ok = true;
    // C: sets containing 1 outside L(a); all should avoid 2.
    std::vector<bool> in_c(x1.size(), false);
    Count c_size = 0;
    for_each_k_subset(n, k, [&](Mask s) {
      if ((s & one) == 0 || lex_rank(s) < a) return;
      if ((s & two) != 0) ok = false;
      ++c_size;
    });
    for (std::size_t u = 0; u < x1.size(); ++u) in_c[u] = lex_rank(x1[u]) >= a;
    // B': members of L(b) avoiding 1; all should contain 2.
    Count b_prime = 0;
    for (std::size_t w = 0; w < x2.size(); ++w) {
      if (lex_rank(x2[w]) >= b) continue;
      ++b_prime;
      for (std::size_t u : from_right[w]) {
        if (!in_c[u]) ok = false;
      }
    }
    for (Count r = 0; r < b; ++r) {
      const Mask s = unrank(r, OrderKind::lex, p).mask();
      if ((s & one) == 0 && (s & two) == 0) ok = false;
    }
    if (c_size < b_prime) ok = false;
    if (!ok) {
      ++violations;
      v.attained_at.emplace_back(a, b);
    }
  }
  v.observed = violations;
  v.note = "pairs checked=" + std::to_string(checked);
  finish(v);
  return v;
}

Verdict check_prop1_graph(int n, int k) {
  Verdict v = base_verdict("prop1.graph", n, k);
  v.expected = binom(n - k - 1, k - 1);
  v.relation = Relation::equal;
  const BipartiteGraph graph = build_prop1_graph(n, k);
  if (auto degree = graph.regular_degree()) {
    v.observed = *degree;
    v.note = "regular, |X_1|=" + std::to_string(graph.left().size());
  } else {
    const auto degrees = graph.left_degrees();
    v.observed = degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
    v.note = "not regular";
    v.expected = v.observed + 1;  // force a failure
  }
  finish(v);
  return v;
}

Verdict check_lemma7(int m, int a, int j) {
  Verdict v = base_verdict("lemma7", m, a);
  v.i = j;
  v.expected = lemma7_bound(m, a, j);
  v.relation = Relation::less_equal;
  const Count lo = binom(m - j, a - j);
  const std::vector<Count> curve = compatibility_curve(m, a);
  Count best = 0;
  bool any = false;
  for (Count x = lo; x < curve.size(); ++x) {
    const Count y = curve[x];
    if (y < x) continue;
    any = true;
    const Count sum = x + y;
    if (sum > best) {
      best = sum;
      v.attained_at.clear();
    }
    if (sum == best) v.attained_at.emplace_back(x, y);
  }
  v.observed = best;
  v.note = "m=n a=k j=i";
  if (!any) v.note += "; no pair satisfies the size hypothesis";
  finish(v);
  return v;
}

Verdict check_lemma7_matchings(int m, int a, int j) {
  Verdict v = base_verdict("lemma7.matching", m, a);
  v.i = j;
  v.relation = Relation::equal;
  if (j < 2) {
    v.note = "no blocks for j=1";
    finish(v);
    return v;
  }
  const auto [a0, b0] = lemma7_parts(m, a, j);
  Count wanted = 0;
  Count matched = 0;
  bool sizes_ok = true;
  Mask used_right_total = 0;
  std::vector<Mask> used_right;
  for (const auto& block : build_lemma7_decomposition(m, a, j)) {
    const int s = block.s;
    sizes_ok = sizes_ok && block.p.size() == binom(m - s - 1, a - s) &&
               block.q.size() == binom(m - s - 1, a - 1);
    const auto matching = maximum_disjoint_matching(block.p, block.q);
    wanted += block.p.size();
    matched += matching.size();
    for (const auto& pair : matching) used_right.push_back(pair.right.mask());
  }
  (void)used_right_total;
  std::sort(used_right.begin(), used_right.end());
  const bool injective =
      std::adjacent_find(used_right.begin(), used_right.end()) == used_right.end();
  v.expected = wanted;
  v.observed = matched;
  v.note = "|A_0|=" + std::to_string(a0.size()) + " |B_0|=" + std::to_string(b0.size());
  if (!sizes_ok) v.note += "; block sizes differ from closed forms";
  if (!injective) v.note += "; combined matching not injective";
  finish(v);
  v.passed = v.passed && sizes_ok && injective && wanted == a0.size();
  return v;
}

std::vector<Verdict> check_kk(int n, int k, int t, SweepMode mode,
                              std::uint64_t samples, std::uint64_t seed) {
  const Params p(n, k);
  if (t < 0 || t > k) throw std::invalid_argument("kk: t outside [0, k]");
  const std::vector<Mask> layer = layer_masks(n, k);
  const Count total = layer.size();
  if (total > 64) throw std::invalid_argument("kk: layer larger than 64 sets");
  const std::vector<Mask> rows = shadow_rows(layer, n, t);
  const Mask all = ground_mask(static_cast<int>(total));

  constexpr Count kUnseen = std::numeric_limits<Count>::max();
  std::vector<Count> minimum(total + 1, kUnseen);
  std::vector<Count> seen(total + 1, 0);

  if (mode == SweepMode::sampled) {
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
      const Mask f = rng() & all;
      const Count size = std::popcount(f);
      const Count sh = std::popcount(or_rows(rows, f));
      minimum[size] = std::min(minimum[size], sh);
      ++seen[size];
    }
  } else {
    require_exhaustive(power_of_two_or_max(total), "kk");
    // shadow[f] = shadow[f minus lowest] | rows[lowest]
    std::vector<Mask> shadow_of(static_cast<std::size_t>(all) + 1, 0);
    for (Mask f = 1; f != 0 && f <= all; ++f) {
      shadow_of[f] = shadow_of[f & (f - 1)] | rows[std::countr_zero(f)];
      if (f == all) break;
    }
    for (Mask f = 0;; ++f) {
      const Count size = std::popcount(f);
      minimum[size] = std::min(minimum[size],
                               static_cast<Count>(std::popcount(shadow_of[f])));
      ++seen[size];
      if (f == all) break;
    }
  }

  std::vector<Verdict> out;
  for (Count size = 0; size <= total; ++size) {
    if (seen[size] == 0) continue;
    Verdict v = base_verdict("kk", n, k);
    v.t = t;
    const ShadowQuery q(p, t, size);
    v.expected = kk_min_shadow_cascade(q);
    v.observed = minimum[size];
    v.attained_at.emplace_back(size, v.observed);
    if (mode == SweepMode::sampled) {
      v.relation = Relation::greater_equal;
      v.seed = seed;
      v.note = "sampled families=" + std::to_string(seen[size]);
      finish(v);
    } else {
      v.relation = Relation::equal;
      const Count segment = kk_min_shadow_segment(q);
      v.note = "exhaustive families=" + std::to_string(seen[size]) +
               " colex segment shadow=" + std::to_string(segment);
      finish(v);
      v.passed = v.passed && segment == v.expected;
    }
    out.push_back(std::move(v));
  }
  return out;
}

Verdict check_mors(int n, int l, int t) {
  Verdict v = base_verdict("mors", n, l);
  v.t = t;
  v.expected = mors_bound(n, l, t);
  v.relation = Relation::greater_equal;
  const std::vector<Mask> layer = layer_masks(n, l);
  if (layer.size() > 64) throw std::invalid_argument("mors: layer larger than 64 sets");
  const Count size = binom(n - 1, l);
  require_exhaustive(family_count(layer.size(), size), "mors");
  const std::vector<Mask> rows = shadow_rows(layer, n, t);
  const Mask ground = ground_mask(n);
  Count best = std::numeric_limits<Count>::max();
  Count examined = 0;
  Count candidates = 0;
  Count at_minimum = 0;
  for_each_k_subset(static_cast<int>(layer.size()), static_cast<int>(size),
                    [&](Mask pick) {
                      ++candidates;
                      if (or_rows(layer, pick) != ground) return;
                      ++examined;
                      const Count sh = std::popcount(or_rows(rows, pick));
                      if (sh < best) {
                        best = sh;
                        at_minimum = 0;
                      }
                      if (sh == best) ++at_minimum;
                    });
  v.observed = examined == 0 ? v.expected : best;
  v.note = "exhaustive families=" + std::to_string(candidates) +
           " full-union=" + std::to_string(examined) +
           " at minimum=" + std::to_string(at_minimum);
  finish(v);
  return v;
}

std::vector<Verdict> check_inequalities(int n, int k) {
  std::vector<Verdict> out;
  for (const auto& report : check_proof_inequalities(n, k)) {
    out.push_back(verdict_from_bound_report(report, n, k));
  }
  return out;
}

Verdict check_thm2_monotone(int n, int k) {
  Verdict v = base_verdict("thm2.monotone", n, k);
  v.expected = 0;
  v.relation = Relation::equal;
  Count violations = 0;
  for (int i = 3; i + 1 <= k + 1; ++i) {
    if (thm2_bound(n, k, i).product_bound > thm2_bound(n, k, i + 1).product_bound) {
      ++violations;
    }
  }
  v.observed = violations;
  finish(v);
  return v;
}

namespace {

template <typename Fn>
std::vector<Verdict> over_grid(const SweepConfig& cfg, Fn&& fn) {
  cfg.validate();
  std::vector<Verdict> out;
  for (int n : cfg.n_range.values()) {
    for (int k : cfg.k_range.values()) fn(n, k, out);
  }
  return out;
}

}  // namespace

std::vector<Verdict> sweep_pyber(const SweepConfig& cfg) {
  return over_grid(cfg, [](int n, int k, std::vector<Verdict>& out) {
    if (k >= 1 && n >= 2 * k) out.push_back(check_pyber(n, k));
  });
}

std::vector<Verdict> sweep_thm2(const SweepConfig& cfg) {
  return over_grid(cfg, [&](int n, int k, std::vector<Verdict>& out) {
    if (k < 2 || n < 2 * k) return;
    for (int i = 3; i <= k + 1; ++i) {
      if (cfg.i_values && std::find(cfg.i_values->begin(), cfg.i_values->end(),
                                    i) == cfg.i_values->end()) {
        continue;
      }
      out.push_back(check_thm2(n, k, i));
    }
  });
}

std::vector<Verdict> sweep_thm1(const SweepConfig& cfg) {
  return over_grid(cfg, [](int n, int k, std::vector<Verdict>& out) {
    if (k < 1 || n <= 2 * k) return;
    out.push_back(check_thm1_segments(n, k));
    if (k >= 2) out.push_back(check_thm1_consistency(n, k));
    const Count layer = binom(n, k);
    if (k >= 2 && layer <= 64 &&
        family_count(layer, binom(n - 1, k - 1)) <= exhaustive_cap()) {
      out.push_back(check_thm1_boundary(n, k));
    }
  });
}

std::vector<Verdict> sweep_prop1(const SweepConfig& cfg) {
  return over_grid(cfg, [](int n, int k, std::vector<Verdict>& out) {
    // At k = 1 the size floor C(n-2, -1) = 0 admits empty families.
    if (k < 2 || n < 2 * k) return;
    out.push_back(verify_prop1(n, k));
    out.push_back(check_prop1_graph(n, k));
  });
}

std::vector<Verdict> sweep_lemma7(const SweepConfig& cfg) {
  return over_grid(cfg, [&](int m, int a, std::vector<Verdict>& out) {
    if (a < 1 || m < 2 * a) return;
    const std::vector<int> js =
        cfg.i_values ? *cfg.i_values : IntRange{1, a}.values();
    for (int j : js) {
      if (j < 1 || j > a) continue;
      out.push_back(verify_lemma7(m, a, j));
    }
  });
}

std::vector<Verdict> verify_kk_and_mors(const SweepConfig& cfg) {
  if (!cfg.t) throw std::invalid_argument("kk/mors sweep needs a shadow level t");
  const int t = *cfg.t;
  return over_grid(cfg, [&](int n, int k, std::vector<Verdict>& out) {
    if (k > n || t > k) return;
    auto kk = check_kk(n, k, t, cfg.mode, cfg.sample_count, cfg.seed);
    out.insert(out.end(), kk.begin(), kk.end());
    if (n >= k && k > t && t >= 1) out.push_back(check_mors(n, k, t));
  });
}

Verdict verify_hilton_exhaustive(int n, int k) {
  return check_hilton(n, k, SweepMode::exhaustive_families, 0, 0);
}

Verdict verify_prop1(int n, int k) {
  Verdict v = check_prop1(n, k);
  const Verdict hood = check_prop1_neighbourhood(n, k);
  v.note = "neighbourhood " + std::string(hood.passed ? "ok" : "VIOLATED") +
           " (" + hood.note + ")";
  v.passed = v.passed && hood.passed;
  return v;
}

Verdict verify_lemma7(int m, int a, int j) {
  Verdict v = check_lemma7(m, a, j);
  const Verdict match = check_lemma7_matchings(m, a, j);
  v.note += "; matching " + std::to_string(match.observed) + "/" +
            std::to_string(match.expected) + (match.passed ? " ok" : " FAILED");
  v.passed = v.passed && match.passed;
  return v;
}

}  // namespace crossfam
