#include <doctest.h>

#include <stdexcept>

#include "brute.hpp"
#include "crossfam/core.hpp"

using namespace crossfam;

__extension__ typedef unsigned __int128 Wide;

TEST_CASE("binom small values") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(4, 0) == 1);
  CHECK(binom(2, 3) == 0);
  CHECK(binom(-1, 0) == 0);
  CHECK(binom(3, -1) == 0);
  CHECK(binom(0, 0) == 1);
}

TEST_CASE("binom matches Pascal recursion up to 40") {
  for (int m = 0; m <= 40; ++m) {
    for (int b = 0; b <= m; ++b) {
      CHECK(binom(m, b) == brute::binom(m, b));
      if (m > 0) CHECK(binom(m, b) == binom(m - 1, b - 1) + binom(m - 1, b));
    }
  }
}

TEST_CASE("binom log-concavity up to 40") {
  for (int m = 1; m < 40; ++m) {
    for (int b = 0; b <= m; ++b) {
      const Wide lhs = static_cast<Wide>(binom(m - 1, b)) * binom(m + 1, b);
      const Wide rhs = static_cast<Wide>(binom(m, b)) * binom(m, b);
      CHECK(lhs <= rhs);
    }
  }
}

TEST_CASE("binom large values and overflow") {
  CHECK(binom(64, 32) == 1832624140942590534ULL);
  CHECK(binom(67, 33) == 14226520737620288370ULL);
  CHECK(binom(100, 2) == 4950);
  CHECK(binom(1000, 3) == 166167000);
  CHECK_THROWS_AS(binom(70, 35), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(Count{1} << 40, Count{1} << 40), std::overflow_error);
  CHECK_THROWS_AS(checked_add(~Count{0}, 1), std::overflow_error);
  CHECK(checked_mul(12, 13) == 156);
}

TEST_CASE("Params validation") {
  CHECK_NOTHROW(Params(5, 2));
  CHECK_THROWS_AS(Params(5, 6), std::invalid_argument);
  CHECK_THROWS_AS(Params(65, 2), std::invalid_argument);
  CHECK_THROWS_AS(Params(5, -1), std::invalid_argument);
  CHECK(Params(7, 3).l() == 4);
  CHECK(Params(7, 3).layer_size() == 35);
}

TEST_CASE("KSubset construction") {
  const KSubset s(6, {2, 4});
  CHECK(s.k() == 2);
  CHECK(s.contains(4));
  CHECK_FALSE(s.contains(3));
  CHECK(s.to_string() == "2,4");
  CHECK(s.elements() == std::vector<int>{2, 4});
  CHECK_THROWS_AS(KSubset(5, {7, 8}), std::invalid_argument);
  CHECK_THROWS_AS(KSubset(5, {3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(KSubset(5, {0}), std::invalid_argument);
  CHECK_THROWS_AS(KSubset::from_mask(3, 0b1000), std::invalid_argument);
  CHECK(KSubset::from_mask(5, 0b10110) == KSubset(5, {2, 3, 5}));
  const KSubset big(64, {1, 64});
  CHECK(big.to_string() == "1,64");
}

TEST_CASE("complement") {
  CHECK(complement(KSubset(5, {1, 2})) == KSubset(5, {3, 4, 5}));
  for (int k = 1; k <= 6; ++k) {
    std::vector<int> lo, hi;
    for (int e = 1; e <= k; ++e) lo.push_back(e);
    for (int e = k + 1; e <= 2 * k; ++e) hi.push_back(e);
    CHECK(complement(KSubset(2 * k, lo)) == KSubset(2 * k, hi));
  }
  CHECK(complement(KSubset(6, {2, 4})) == KSubset(6, {1, 3, 5, 6}));
  CHECK(complement(KSubset(64, {5})).k() == 63);
}

TEST_CASE("family_complement") {
  CHECK(family_complement(SetFamily(Params(4, 2))).empty());
  CHECK(family_complement(SetFamily(Params(4, 2), {KSubset(4, {1, 2})})) ==
        SetFamily(Params(4, 2), {KSubset(4, {3, 4})}));
  CHECK(family_complement(full_layer(Params(4, 2))) == full_layer(Params(4, 2)));
  const SetFamily f(Params(6, 2), {KSubset(6, {1, 2}), KSubset(6, {3, 6})});
  const SetFamily c = family_complement(f);
  CHECK(c.params() == Params(6, 4));
  CHECK(family_complement(c) == f);
}

TEST_CASE("restrict_family") {
  const Params p(4, 2);
  const SetFamily f(p, {KSubset(4, {1, 3}), KSubset(4, {2, 3}), KSubset(4, {1, 2})});
  const SetFamily r = restrict_family(f, 3, 2);
  CHECK(r.size() == 1);
  CHECK(r.contains(KSubset(4, {1})));
  CHECK(restrict_family(SetFamily(p), 3, 2).empty());

  SetFamily star(Params(5, 3));
  for (int e = 3; e <= 5; ++e) star.insert(KSubset(5, {1, 2, e}));
  CHECK(restrict_family(star, 1, 2).empty());
  CHECK_THROWS_AS(restrict_family(f, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(restrict_family(f, 5, 2), std::invalid_argument);
}

TEST_CASE("SetFamily basics") {
  const Params p(5, 2);
  SetFamily f(p);
  CHECK(f.insert(KSubset(5, {2, 3})));
  CHECK_FALSE(f.insert(KSubset(5, {2, 3})));
  CHECK(f.insert(KSubset(5, {1, 2})));
  CHECK(f.size() == 2);
  CHECK(f.common_elements() == element_bit(2));
  CHECK(f.union_elements() == (element_bit(1) | element_bit(2) | element_bit(3)));
  CHECK(SetFamily(p).common_elements() == ground_mask(5));
  CHECK_THROWS_AS(f.insert(KSubset(5, {1, 2, 3})), std::invalid_argument);
  CHECK_THROWS_AS(SetFamily::from_masks(p, {0b111}), std::invalid_argument);
  CHECK(full_layer(p).size() == 10);
}

TEST_CASE("k-subset enumeration matches the brute layer") {
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::set<brute::Set> expected;
      for (const auto& s : brute::layer(n, k)) expected.insert(s);
      std::set<brute::Set> seen;
      Mask prev = 0;
      bool increasing = true;
      std::size_t count = 0;
      for_each_k_subset(n, k, [&](Mask m) {
        if (count > 0 && m <= prev) increasing = false;
        prev = m;
        ++count;
        seen.insert(KSubset::from_mask(n, m).elements());
      });
      CHECK(increasing);
      CHECK(count == brute::binom(n, k));
      CHECK(seen == expected);
    }
  }
  std::size_t top = 0;
  for_each_k_subset(64, 63, [&](Mask) { ++top; });
  CHECK(top == 64);
}

TEST_CASE("sub-k-subset enumeration") {
  const Mask set = element_bit(2) | element_bit(5) | element_bit(7) | element_bit(9);
  std::size_t count = 0;
  for_each_sub_k_subset(set, 2, [&](Mask sub) {
    CHECK(std::popcount(sub) == 2);
    CHECK((sub & ~set) == 0);
    ++count;
  });
  CHECK(count == 6);
}
