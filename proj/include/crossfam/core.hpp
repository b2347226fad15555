#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace crossfam {

/// Bit i-1 set <=> element i present. Ground sets are limited to [1, 64].
using Mask = std::uint64_t;
/// Exact nonnegative counts (family sizes, binomials, products of those).
using Count = std::uint64_t;

inline constexpr int kMaxGround = 64;

/// Exact binomial coefficient C(m, b).
///
/// Returns 0 when b < 0, b > m or m < 0, so formulas such as C(n-i, k-i)
/// degenerate without special cases. Values that do not fit in 64 bits throw
/// std::overflow_error instead of wrapping.
Count binom(std::int64_t m, std::int64_t b);

/// a * b, throwing std::overflow_error on wraparound.
Count checked_mul(Count a, Count b);
/// a + b, throwing std::overflow_error on wraparound.
Count checked_add(Count a, Count b);

/// Ground-set size n and uniform subset size k, 0 <= k <= n <= 64.
struct Params {
  int n = 0;
  int k = 0;

  Params() = default;
  Params(int n_, int k_);

  int l() const { return n - k; }
  Count layer_size() const { return binom(n, k); }

  friend bool operator==(const Params&, const Params&) = default;
};

/// Mask with bits for elements 1..n.
constexpr Mask ground_mask(int n) {
  return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

constexpr Mask element_bit(int e) { return Mask{1} << (e - 1); }

/// A subset of [n] stored as a bitmask. The size k is implied by the mask.
class KSubset {
 public:
  KSubset() = default;
  KSubset(int n, std::span<const int> elements);
  KSubset(int n, std::initializer_list<int> elements);

  /// Throws std::invalid_argument if `bits` has elements outside [1, n].
  static KSubset from_mask(int n, Mask bits);

  int n() const { return n_; }
  int k() const { return std::popcount(bits_); }
  Mask mask() const { return bits_; }
  bool contains(int e) const {
    return e >= 1 && e <= n_ && (bits_ & element_bit(e)) != 0;
  }
  /// Sorted, 1-based.
  std::vector<int> elements() const;
  /// Comma-separated elements, e.g. "1,2,5".
  std::string to_string() const;

  friend bool operator==(const KSubset&, const KSubset&) = default;
  friend std::strong_ordering operator<=>(const KSubset&,
                                          const KSubset&) = default;

 private:
  int n_ = 0;
  Mask bits_ = 0;
};

/// [n] minus s, an (n-k)-subset.
KSubset complement(const KSubset& s);

/// A set of k-subsets of [n]. Members are kept as sorted, distinct masks, so
/// equality is independent of insertion order.
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(Params params) : params_(params) {}
  SetFamily(Params params, std::span<const KSubset> members);
  SetFamily(Params params, std::initializer_list<KSubset> members)
      : SetFamily(params, std::span<const KSubset>(members.begin(),
                                                   members.size())) {}

  /// Throws std::invalid_argument unless every mask is a k-subset of [n].
  static SetFamily from_masks(Params params, std::vector<Mask> masks);

  const Params& params() const { return params_; }
  std::size_t size() const { return masks_.size(); }
  bool empty() const { return masks_.empty(); }

  bool contains(const KSubset& s) const;
  bool contains_mask(Mask m) const;
  /// Returns false if `s` was already present.
  bool insert(const KSubset& s);

  /// Sorted ascending by mask value (not by any of the subset orders).
  std::span<const Mask> masks() const { return masks_; }
  std::vector<KSubset> members() const;

  /// Intersection of all members; ground_mask(n) for the empty family.
  Mask common_elements() const;
  /// Union of all members.
  Mask union_elements() const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  Params params_;
  std::vector<Mask> masks_;
};

/// Elementwise complement: a family of (n-k)-sets with the same size.
SetFamily family_complement(const SetFamily& f);

/// { A - {required} : A in f, required in A, forbidden not in A }, a family of
/// (k-1)-subsets of the same ground set.
SetFamily restrict_family(const SetFamily& f, int required, int forbidden);

/// All C(n, k) subsets of the layer.
SetFamily full_layer(Params params);

/// Successor of x among masks with the same popcount (Gosper's hack).
/// Returns 0 once the successor would need bit 64.
constexpr Mask next_same_popcount(Mask x) {
  const Mask low = x & (~x + 1);
  const Mask ripple = x + low;
  if (ripple == 0) return 0;
  return ripple | (((x ^ ripple) >> 2) / low);
}

/// Calls fn(mask) for every k-subset of the lowest `width` bits, in
/// increasing numeric order of the mask (which is colex order).
template <typename Fn>
void for_each_k_subset(int width, int k, Fn&& fn) {
  if (k < 0 || k > width) return;
  if (k == 0) {
    fn(Mask{0});
    return;
  }
  const Mask limit = ground_mask(width);
  for (Mask x = ground_mask(k); x != 0 && (x & ~limit) == 0;
       x = next_same_popcount(x)) {
    fn(x);
  }
}

/// Calls fn(sub) for every t-element subset of the bits of `set`.
template <typename Fn>
void for_each_sub_k_subset(Mask set, int t, Fn&& fn) {
  const int width = std::popcount(set);
  if (t < 0 || t > width) return;
  int positions[kMaxGround];
  int count = 0;
  for (Mask rest = set; rest != 0; rest &= rest - 1) {
    positions[count++] = std::countr_zero(rest);
  }
  for_each_k_subset(width, t, [&](Mask pattern) {
    Mask sub = 0;
    for (Mask p = pattern; p != 0; p &= p - 1) {
      sub |= Mask{1} << positions[std::countr_zero(p)];
    }
    fn(sub);
  });
}

}  // namespace crossfam
