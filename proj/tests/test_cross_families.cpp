#include <doctest.h>

#include <functional>

#include "brute.hpp"
#include "crossfam/bipartite.hpp"
#include "crossfam/cross_families.hpp"
#include "crossfam/shadows.hpp"

using namespace crossfam;

namespace {

SetFamily star(Params p, int e) {
  SetFamily f(p);
  for (const auto& s : full_layer(p).members()) {
    if (s.contains(e)) f.insert(s);
  }
  return f;
}

brute::Family as_brute(const SetFamily& f) {
  brute::Family out;
  for (const auto& s : f.members()) out.push_back(s.elements());
  return out;
}

// Maximum matching by trying every injection; tiny inputs only.
std::size_t brute_matching(const brute::Family& p, const brute::Family& q) {
  std::vector<bool> used(q.size(), false);
  std::function<std::size_t(std::size_t)> go = [&](std::size_t i) -> std::size_t {
    if (i == p.size()) return 0;
    std::size_t best = go(i + 1);
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (used[j] || !brute::disjoint(p[i], q[j])) continue;
      used[j] = true;
      best = std::max(best, 1 + go(i + 1));
      used[j] = false;
    }
    return best;
  };
  return go(0);
}

}  // namespace

TEST_CASE("is_cross_intersecting") {
  const Params p(6, 3);
  CHECK(is_cross_intersecting(star(p, 1), star(p, 1)));
  const Params q(6, 2);
  CHECK_FALSE(is_cross_intersecting(SetFamily(q, {KSubset(6, {1, 2})}),
                                    SetFamily(q, {KSubset(6, {3, 4})})));
  const ExtremalPair e = build_extremal_pair(6, 3, 3);
  CHECK(is_cross_intersecting(e.a_family, e.b_family));
  CHECK(brute::cross_intersecting(as_brute(e.a_family), as_brute(e.b_family)));
  CHECK(is_cross_intersecting(SetFamily(p), star(p, 2)));
  CHECK_THROWS_AS(is_cross_intersecting(star(p, 1), star(Params(7, 3), 1)),
                  std::invalid_argument);
}

TEST_CASE("is_cross_union") {
  const Params p(6, 3);
  SetFamily inner(p);
  for (const auto& s : full_layer(p).members()) {
    if (!s.contains(6)) inner.insert(s);
  }
  CHECK(is_cross_union(inner, inner));
  CHECK_FALSE(is_cross_union(SetFamily(p, {KSubset(6, {1, 2, 3})}),
                             SetFamily(p, {KSubset(6, {4, 5, 6})})));
  const ExtremalPair e = build_extremal_pair(6, 3, 3);
  CHECK(is_cross_union(family_complement(e.a_family), family_complement(e.b_family)));
}

TEST_CASE("hilton_compress") {
  const ExtremalPair e = build_extremal_pair(6, 3, 3);
  const auto [sa, sb] = hilton_compress(e.a_family, e.b_family);
  CHECK(sa.size == 7);
  CHECK(sb.size == 13);
  CHECK(sa.order == OrderKind::lex);
  CHECK(initial_segment(sa) == e.a_family);
  CHECK(initial_segment(sb) == e.b_family);
  CHECK(is_cross_intersecting(initial_segment(sa), initial_segment(sb)));

  const Params p(6, 3);
  const auto [ea, eb] = hilton_compress(SetFamily(p), star(p, 4));
  CHECK(ea.size == 0);
  CHECK(eb.size == 10);
  const auto [s1, s2] = hilton_compress(star(p, 1), star(p, 1));
  CHECK(s1.size == 10);
  CHECK(s2.size == 10);
  CHECK_THROWS_AS(hilton_compress(SetFamily(Params(6, 2), {KSubset(6, {1, 2})}),
                                  SetFamily(Params(6, 2), {KSubset(6, {3, 4})})),
                  std::invalid_argument);
}

TEST_CASE("max_compatible_b examples") {
  CHECK(max_compatible_b(6, 3, 10) == 10);
  CHECK(max_compatible_b(6, 3, 7) == 13);
  CHECK(max_compatible_b(6, 3, 9) == 11);
  CHECK(max_compatible_b(6, 3, 0) == 20);
  CHECK_THROWS_AS(max_compatible_b(5, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(max_compatible_b(6, 3, 21), std::out_of_range);
}

TEST_CASE("max_compatible_b agrees with pairwise brute force for C(n,k) <= 300") {
  for (int n = 2; n <= 20; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      const Count total = binom(n, k);
      if (total > 300) continue;
      const std::vector<Count> curve = compatibility_curve(n, k);
      REQUIRE(curve.size() == total + 1);
      for (Count a = 0; a <= total; ++a) {
        const Count fast = max_compatible_b(n, k, a);
        REQUIRE(fast == curve[a]);
        REQUIRE(fast == max_compatible_b_bruteforce(n, k, a));
        if (total <= 70) REQUIRE(fast == brute::max_compatible(n, k, a));
      }
    }
  }
}

TEST_CASE("compatibility curve is symmetric and nonincreasing") {
  for (int n = 2; n <= 14; ++n) {
    for (int k = 1; 2 * k <= n && k <= 4; ++k) {
      const std::vector<Count> curve = compatibility_curve(n, k);
      for (Count a = 0; a < curve.size(); ++a) {
        if (a + 1 < curve.size()) REQUIRE(curve[a + 1] <= curve[a]);
        // b <= curve[a] iff a <= curve[b]
        const Count b = curve[a];
        REQUIRE(curve[b] >= a);
        if (b + 1 < curve.size()) REQUIRE(curve[b + 1] < a);
      }
    }
  }
}

TEST_CASE("extremal pair sizes") {
  const ExtremalPair e3 = build_extremal_pair(6, 3, 3);
  CHECK(e3.a_size == 7);
  CHECK(e3.b_size == 13);
  CHECK(e3.boundary);
  const ExtremalPair e4 = build_extremal_pair(6, 3, 4);
  CHECK(e4.a_size == 9);
  CHECK(e4.b_size == 11);
  const ExtremalPair e2 = build_extremal_pair(8, 3, 2);
  CHECK(e2.a_size == 6);
  CHECK(e2.b_size == 36);
  CHECK_FALSE(e2.boundary);
  for (const auto& s : e2.a_family.members()) CHECK((s.contains(1) && s.contains(2)));
  CHECK_THROWS_AS(build_extremal_pair(6, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_extremal_pair(6, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(build_extremal_pair(5, 3, 3), std::invalid_argument);
  for (int n = 4; n <= 10; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      for (int i = 2; i <= k + 1; ++i) {
        const ExtremalPair e = build_extremal_pair(n, k, i);
        CHECK(e.a_family.size() == extremal_a_size(n, k, i));
        CHECK(e.b_family.size() == extremal_b_size(n, k, i));
        CHECK(brute::cross_intersecting(as_brute(e.a_family), as_brute(e.b_family)));
      }
    }
  }
}

TEST_CASE("closed-form bounds") {
  CHECK(pyber_bound(6, 3) == 100);
  CHECK(pyber_bound(4, 2) == 9);
  CHECK(pyber_bound(2, 1) == 1);
  CHECK(thm1_bound(6, 3) == 99);
  CHECK(thm1_bound(5, 2) == 10);
  CHECK(thm1_bound(7, 3) == 192);
  CHECK(thm1_bound(8, 4) == 1224);
  CHECK_THROWS_AS(thm1_bound(3, 2), std::invalid_argument);
  CHECK(thm2_bound(6, 3, 3) == Thm2Bound{13, 91});
  CHECK(thm2_bound(6, 3, 4) == Thm2Bound{11, 99});
  CHECK(thm2_bound(8, 4, 3) == Thm2Bound{45, 1125});
  CHECK(thm2_bound(8, 4, 5).product_bound == 1224);
  CHECK_THROWS_AS(thm2_bound(6, 3, 2), std::invalid_argument);
  CHECK(prop1_sum_bound(6, 3) == 20);
  CHECK(prop1_sum_bound(4, 2) == 6);
  CHECK(prop1_sum_bound(2, 1) == 2);
  CHECK(lemma7_bound(4, 2, 1) == 6);
  CHECK(lemma7_bound(6, 3, 2) == 20);
  CHECK(lemma7_bound(6, 2, 2) == 10);
  CHECK(lemma7_bound(8, 3, 2) == 42);
}

TEST_CASE("product bound at i = k+1 equals the boundary bound") {
  for (int n = 5; n <= 28; ++n) {
    for (int k = 2; 2 * k < n; ++k) {
      CHECK(thm2_bound(n, k, k + 1).product_bound == thm1_bound(n, k));
    }
  }
}

TEST_CASE("product bound is nondecreasing in i") {
  for (int n = 4; n <= 20; ++n) {
    for (int k = 2; k <= 8 && 2 * k <= n; ++k) {
      for (int i = 3; i <= k; ++i) {
        CHECK(thm2_bound(n, k, i).product_bound <= thm2_bound(n, k, i + 1).product_bound);
      }
    }
  }
}

TEST_CASE("bipartite disjointness graph and Hopcroft-Karp") {
  const BipartiteGraph g = build_prop1_graph(6, 3);
  CHECK(g.left().size() == 6);
  CHECK(g.right().size() == 6);
  CHECK(g.regular_degree() == std::optional<std::size_t>(1));
  CHECK(build_prop1_graph(5, 2).regular_degree() == std::optional<std::size_t>(2));
  CHECK(build_prop1_graph(5, 2).left().size() == 3);
  CHECK(build_prop1_graph(4, 2).regular_degree() == std::optional<std::size_t>(1));
  for (int n = 4; n <= 11; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      const BipartiteGraph h = build_prop1_graph(n, k);
      CHECK(h.regular_degree() == std::optional<std::size_t>(binom(n - k - 1, k - 1)));
      const auto match = maximum_matching(h);
      std::size_t size = 0;
      for (int m : match) size += m >= 0;
      // Regular bipartite graphs have perfect matchings.
      CHECK(size == h.left().size());
    }
  }
}

TEST_CASE("maximum matching agrees with exhaustive search") {
  const Params p(6, 2);
  const SetFamily layer = full_layer(p);
  const auto masks = layer.masks();
  for (std::size_t shift = 0; shift < 6; ++shift) {
    std::vector<Mask> left, right;
    for (std::size_t j = 0; j < masks.size(); ++j) {
      ((j + shift) % 3 == 0 ? left : right).push_back(masks[j]);
    }
    right.resize(std::min<std::size_t>(right.size(), 6));
    const SetFamily l = SetFamily::from_masks(p, left), r = SetFamily::from_masks(p, right);
    const auto pairs = maximum_disjoint_matching(l, r);
    CHECK(pairs.size() == brute_matching(as_brute(l), as_brute(r)));
    for (const auto& pair : pairs) CHECK((pair.left.mask() & pair.right.mask()) == 0);
  }
}

TEST_CASE("block decomposition") {
  const auto blocks = build_lemma7_decomposition(6, 2, 2);
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0].p.size() == 4);
  CHECK(blocks[0].q.size() == 4);
  const auto [a0, b0] = lemma7_parts(6, 2, 2);
  CHECK(a0.size() == 4);
  CHECK(b0.size() == 4);
  const auto m = find_block_matching(blocks[0].p, blocks[0].q);
  CHECK(m.size() == 4);
  for (const auto& pair : m) {
    CHECK(pair.left.contains(1));
    CHECK(pair.right.contains(2));
    CHECK((pair.left.mask() & pair.right.mask()) == 0);
  }

  const auto big = build_lemma7_decomposition(8, 3, 3);
  REQUIRE(big.size() == 2);
  CHECK(big[0].p.size() == 15);
  CHECK(big[0].q.size() == 15);
  CHECK(big[1].p.size() == 5);
  CHECK(big[1].q.size() == 10);
  CHECK(maximum_disjoint_matching(big[1].p, big[1].q).size() == 5);
  CHECK(find_block_matching(SetFamily(Params(8, 3)), big[1].q).empty());

  const Params p4(4, 2);
  CHECK_THROWS_AS(find_block_matching(SetFamily(p4, {KSubset(4, {1, 2}), KSubset(4, {1, 3})}),
                                      SetFamily(p4, {KSubset(4, {3, 4})})),
                  std::domain_error);

  for (int mm = 4; mm <= 12; ++mm) {
    for (int a = 1; 2 * a <= mm; ++a) {
      CHECK(build_lemma7_decomposition(mm, a, 2).size() == 1);
      for (int j = 2; j <= a; ++j) {
        Count total = 0;
        for (const auto& block : build_lemma7_decomposition(mm, a, j)) {
          total += block.p.size();
          CHECK(find_block_matching(block.p, block.q).size() == block.p.size());
        }
        CHECK(total == lemma7_parts(mm, a, j).first.size());
      }
    }
  }
}

TEST_CASE("proof inequalities") {
  const auto reports = check_proof_inequalities(6, 3);
  bool saw_ratio = false, saw_tail = false;
  for (const auto& r : reports) {
    CHECK(r.verdict != BoundVerdict::fails);
    if (r.bound_name == "ratio_step" && r.parameter("i") == 2) {
      saw_ratio = true;
      CHECK(r.observed == 80);
      CHECK(r.bound_value == 100);
    }
    if (r.bound_name == "tail_ratio" && r.parameter("x") == 3) {
      saw_tail = true;
      CHECK(r.observed == 12);
      CHECK(r.bound_value == 30);
    }
  }
  CHECK(saw_ratio);
  CHECK(saw_tail);
  for (const auto& r : check_proof_inequalities(4, 2)) {
    if (r.bound_name == "ratio_step" && r.parameter("i") == 2) {
      CHECK(r.observed == 6);
      CHECK(r.bound_value == 9);
    }
  }
  for (int n = 2; n <= 20; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      for (const auto& r : check_proof_inequalities(n, k)) {
        INFO(r.bound_name, " n=", n, " k=", k);
        CHECK(r.verdict != BoundVerdict::fails);
      }
    }
  }
}
