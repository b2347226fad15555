#include <doctest.h>

#include <cstdlib>

#include "brute.hpp"
#include "crossfam/cross_families.hpp"
#include "crossfam/oracle.hpp"
#include "crossfam/shadows.hpp"

using namespace crossfam;

namespace {

bool has_pair(const Verdict& v, Count a, Count b) {
  for (const auto& p : v.attained_at) {
    if (p == SizePair{a, b}) return true;
  }
  return false;
}

SweepConfig grid(int n_lo, int n_hi, int k_lo, int k_hi) {
  SweepConfig cfg;
  cfg.n_range = {n_lo, n_hi};
  cfg.k_range = {k_lo, k_hi};
  return cfg;
}

}  // namespace

TEST_CASE("pyber sweep examples") {
  const Verdict v = check_pyber(6, 3);
  CHECK(v.passed);
  CHECK(v.observed == 100);
  CHECK(has_pair(v, 10, 10));
  const Verdict w = check_pyber(4, 2);
  CHECK(w.passed);
  CHECK(w.observed == 9);
  // Among segments the maximum is attained only at (3,3); the other
  // maximizers at n = 2k are not segment pairs.
  CHECK(w.attained_at == std::vector<SizePair>{{3, 3}});
  CHECK(check_pyber(2, 1).observed == 1);
}

TEST_CASE("pyber by explicit segment products") {
  // Independent of the compatibility curve: test every segment pair.
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      const brute::Family lex = brute::sorted_layer(n, k, brute::lex_less);
      std::uint64_t best = 0;
      for (std::size_t a = 0; a <= lex.size(); ++a) {
        best = std::max<std::uint64_t>(best, a * brute::max_compatible(n, k, a));
      }
      CHECK(best == brute::binom(n - 1, k - 1) * brute::binom(n - 1, k - 1));
      CHECK(check_pyber(n, k).observed == best);
    }
  }
}

TEST_CASE("thm2 examples") {
  const Verdict v = check_thm2(6, 3, 3);
  CHECK(v.passed);
  CHECK(v.expected == 91);
  CHECK(v.observed == 91);
  CHECK(has_pair(v, 7, 13));
  const Verdict w = check_thm2(6, 3, 4);
  CHECK(w.observed == 99);
  CHECK(has_pair(w, 9, 11));
  const Verdict z = check_thm2(8, 4, 5);
  CHECK(z.passed);
  CHECK(z.observed == 1224);
}

TEST_CASE("thm1 checks") {
  CHECK(check_thm1_segments(6, 3).expected == 99);
  CHECK(check_thm1_segments(6, 3).observed == 99);
  CHECK(has_pair(check_thm1_segments(6, 3), 9, 11));
  const Verdict five = check_thm1_segments(5, 2);
  CHECK(five.passed);
  CHECK(five.expected == 10);
  CHECK(check_thm1_segments(7, 3).passed);
  CHECK(check_thm1_segments(7, 3).expected == 192);
  CHECK(check_thm1_consistency(8, 4).passed);
  const Verdict b = check_thm1_boundary(5, 2);
  CHECK(b.passed);
  CHECK(b.expected == 2);
  CHECK(b.observed <= 2);
  CHECK(check_thm1_boundary(6, 2).passed);
  CHECK_THROWS_AS(check_thm1_boundary(6, 3), std::invalid_argument);
  CHECK(check_thm1_boundary(7, 1).passed);
}

TEST_CASE("hilton checks") {
  CHECK(check_hilton(4, 2, SweepMode::exhaustive_families, 0, 0).passed);
  const Verdict v = verify_hilton_exhaustive(5, 2);
  CHECK(v.passed);
  CHECK(v.observed == 0);
  const Verdict s = check_hilton(6, 3, SweepMode::sampled, 20000, 3);
  CHECK(s.passed);
  CHECK(s.seed == std::optional<std::uint64_t>(3));
  CHECK(check_hilton(6, 3, SweepMode::sampled, 20000, 3) == s);
  CHECK_THROWS_AS(check_hilton(7, 3, SweepMode::exhaustive_families, 0, 0),
                  std::invalid_argument);
}

TEST_CASE("hilton explicit pair count at (4,2)") {
  // Cross-intersecting pairs over the 6 two-subsets of [4], counted directly.
  const brute::Family layer = brute::layer(4, 2);
  std::size_t pairs = 0;
  for (unsigned a = 0; a < 64; ++a) {
    for (unsigned b = 0; b < 64; ++b) {
      bool ok = true;
      for (int x = 0; x < 6 && ok; ++x) {
        for (int y = 0; y < 6 && ok; ++y) {
          if ((a >> x & 1) && (b >> y & 1) && brute::disjoint(layer[x], layer[y])) ok = false;
        }
      }
      pairs += ok;
    }
  }
  const Verdict v = check_hilton(4, 2, SweepMode::exhaustive_families, 0, 0);
  CHECK(v.note == "exhaustive pairs=" + std::to_string(pairs));
}

TEST_CASE("prop1 checks") {
  const Verdict v = verify_prop1(6, 3);
  CHECK(v.passed);
  CHECK(v.observed == 20);
  CHECK(has_pair(v, 10, 10));
  CHECK(verify_prop1(5, 2).observed <= 8);
  CHECK(check_prop1_neighbourhood(7, 3).passed);
  CHECK(check_prop1_graph(6, 3).observed == 1);
  CHECK(check_prop1_graph(5, 2).observed == 2);
}

TEST_CASE("lemma7 checks") {
  const Verdict a = verify_lemma7(6, 2, 2);
  CHECK(a.passed);
  CHECK(a.expected == 10);
  const Verdict b = verify_lemma7(4, 2, 1);
  CHECK(b.passed);
  CHECK(b.expected == 6);
  CHECK(b.observed == 6);
  CHECK(b.attained_at == std::vector<SizePair>{{3, 3}});
  const Verdict c = verify_lemma7(8, 3, 2);
  CHECK(c.passed);
  CHECK(c.expected == 42);
  const Verdict m = check_lemma7_matchings(8, 3, 3);
  CHECK(m.passed);
  CHECK(m.expected == 20);
}

TEST_CASE("kk exhaustive at (5,3,2)") {
  const auto verdicts = check_kk(5, 3, 2, SweepMode::exhaustive_families, 0, 0);
  REQUIRE(verdicts.size() == 11);
  for (const auto& v : verdicts) {
    CHECK(v.passed);
    CHECK(v.relation == Relation::equal);
  }
  CHECK(verdicts[5].observed == 8);
}

TEST_CASE("kk exhaustive minimum against a direct brute minimum at (4,2,1)") {
  const brute::Family layer = brute::layer(4, 2);
  std::vector<std::uint64_t> best(7, ~0ULL);
  for (unsigned f = 0; f < 64; ++f) {
    brute::Family fam;
    for (int j = 0; j < 6; ++j) {
      if (f >> j & 1) fam.push_back(layer[j]);
    }
    best[fam.size()] = std::min<std::uint64_t>(best[fam.size()], brute::shadow(fam, 1).size());
  }
  const auto verdicts = check_kk(4, 2, 1, SweepMode::exhaustive_families, 0, 0);
  for (const auto& v : verdicts) {
    CHECK(v.observed == best[v.attained_at.front().first]);
  }
}

TEST_CASE("kk sampled is reproducible") {
  const auto a = check_kk(6, 3, 2, SweepMode::sampled, 5000, 11);
  const auto b = check_kk(6, 3, 2, SweepMode::sampled, 5000, 11);
  CHECK(a == b);
  for (const auto& v : a) CHECK(v.passed);
}

TEST_CASE("mors check") {
  const Verdict v = check_mors(5, 3, 2);
  CHECK(v.passed);
  CHECK(v.expected == 8);
  CHECK(v.observed == 8);
  CHECK(v.note.find("families=210 ") != std::string::npos);
}

TEST_CASE("inequality and monotonicity verdicts") {
  for (const auto& v : check_inequalities(6, 3)) CHECK(v.passed);
  CHECK(check_thm2_monotone(12, 5).passed);
}

TEST_CASE("sweeps skip points outside preconditions") {
  CHECK(sweep_pyber(grid(2, 8, 1, 4)).size() == 16);
  for (const auto& v : sweep_thm2(grid(4, 9, 1, 4))) CHECK(v.passed);
  for (const auto& v : sweep_thm1(grid(5, 9, 1, 3))) CHECK(v.passed);
  for (const auto& v : sweep_prop1(grid(4, 9, 1, 3))) {
    CHECK(v.passed);
    CHECK(*v.k >= 2);
  }
  SweepConfig l = grid(4, 8, 1, 3);
  l.i_values = std::vector<int>{1, 2};
  for (const auto& v : sweep_lemma7(l)) CHECK(v.passed);
  SweepConfig kk = grid(5, 5, 3, 3);
  kk.t = 2;
  kk.mode = SweepMode::exhaustive_families;
  const auto out = verify_kk_and_mors(kk);
  CHECK(out.size() == 12);
  for (const auto& v : out) CHECK(v.passed);
}

TEST_CASE("sweep configuration validation") {
  SweepConfig cfg = grid(6, 6, 3, 3);
  cfg.mode = SweepMode::exhaustive_families;
  CHECK_NOTHROW(cfg.validate());
  cfg = grid(7, 7, 3, 3);
  cfg.mode = SweepMode::exhaustive_families;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = grid(20, 20, 10, 10);
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = grid(5, 4, 1, 1);
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = grid(4, 14, 1, 4);
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("exhaustive cap follows the environment") {
  CHECK(exhaustive_cap() == (Count{1} << 20));
  setenv("CROSSFAM_MAX_EXHAUSTIVE", "512", 1);
  CHECK(exhaustive_cap() == 512);
  CHECK_THROWS_AS(check_hilton(5, 2, SweepMode::exhaustive_families, 0, 0),
                  std::invalid_argument);
  setenv("CROSSFAM_MAX_EXHAUSTIVE", "junk", 1);
  CHECK(exhaustive_cap() == (Count{1} << 20));
  unsetenv("CROSSFAM_MAX_EXHAUSTIVE");
}
