#include "crossfam/core.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace crossfam {

namespace {

// C(m, b) for m <= 67 fits in 64 bits; C(68, 34) does not.
constexpr int kTableRows = 68;

using Table = std::array<std::array<Count, kTableRows>, kTableRows>;

constexpr Table make_pascal() {
  Table t{};
  for (int m = 0; m < kTableRows; ++m) {
    t[m][0] = 1;
    for (int b = 1; b <= m; ++b) t[m][b] = t[m - 1][b - 1] + t[m - 1][b];
  }
  return t;
}

constexpr Table kPascal = make_pascal();

__extension__ typedef unsigned __int128 Wide;

}  // namespace

Count binom(std::int64_t m, std::int64_t b) {
  if (m < 0 || b < 0 || b > m) return 0;
  if (m < kTableRows) return kPascal[m][b];
  b = std::min(b, m - b);
  Wide r = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    // r holds C(m - b + i - 1, i - 1) here; the next value is exact.
    r = r * static_cast<Wide>(m - b + i) / static_cast<Wide>(i);
    if (r > std::numeric_limits<Count>::max()) {
      throw std::overflow_error("binom(" + std::to_string(m) + ", " +
                                std::to_string(b) +
                                ") does not fit in 64 bits");
    }
  }
  return static_cast<Count>(r);
}

Count checked_mul(Count a, Count b) {
  Count r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("64-bit multiplication overflow");
  }
  return r;
}

Count checked_add(Count a, Count b) {
  Count r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("64-bit addition overflow");
  }
  return r;
}

Params::Params(int n_, int k_) : n(n_), k(k_) {
  if (n < 0 || n > kMaxGround) {
    throw std::invalid_argument("ground set size n=" + std::to_string(n) +
                                " outside [0, 64]");
  }
  if (k < 0 || k > n) {
    throw std::invalid_argument("subset size k=" + std::to_string(k) +
                                " outside [0, n=" + std::to_string(n) + "]");
  }
}

KSubset::KSubset(int n, std::span<const int> elements) : n_(n) {
  if (n < 0 || n > kMaxGround) {
    throw std::invalid_argument("ground set size n=" + std::to_string(n) +
                                " outside [0, 64]");
  }
  int prev = 0;
  for (int e : elements) {
    if (e < 1 || e > n) {
      throw std::invalid_argument("element " + std::to_string(e) +
                                  " outside [1, " + std::to_string(n) + "]");
    }
    if (e <= prev) {
      throw std::invalid_argument("elements must be strictly increasing");
    }
    bits_ |= element_bit(e);
    prev = e;
  }
}

KSubset::KSubset(int n, std::initializer_list<int> elements)
    : KSubset(n, std::span<const int>(elements.begin(), elements.size())) {}

KSubset KSubset::from_mask(int n, Mask bits) {
  if (n < 0 || n > kMaxGround) {
    throw std::invalid_argument("ground set size outside [0, 64]");
  }
  if ((bits & ~ground_mask(n)) != 0) {
    throw std::invalid_argument("mask has elements outside [1, n]");
  }
  KSubset s;
  s.n_ = n;
  s.bits_ = bits;
  return s;
}

std::vector<int> KSubset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k()));
  for (Mask rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

std::string KSubset::to_string() const {
  std::string out;
  for (int e : elements()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

KSubset complement(const KSubset& s) {
  return KSubset::from_mask(s.n(), ground_mask(s.n()) & ~s.mask());
}

SetFamily::SetFamily(Params params, std::span<const KSubset> members)
    : params_(params) {
  masks_.reserve(members.size());
  for (const auto& s : members) {
    if (s.n() != params_.n || s.k() != params_.k) {
      throw std::invalid_argument("member {" + s.to_string() +
                                  "} does not match family parameters");
    }
    masks_.push_back(s.mask());
  }
  std::sort(masks_.begin(), masks_.end());
  masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
}

SetFamily SetFamily::from_masks(Params params, std::vector<Mask> masks) {
  const Mask ground = ground_mask(params.n);
  for (Mask m : masks) {
    if ((m & ~ground) != 0 || std::popcount(m) != params.k) {
      throw std::invalid_argument("mask is not a k-subset of [n]");
    }
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  SetFamily f(params);
  f.masks_ = std::move(masks);
  return f;
}

bool SetFamily::contains_mask(Mask m) const {
  return std::binary_search(masks_.begin(), masks_.end(), m);
}

bool SetFamily::contains(const KSubset& s) const {
  return s.n() == params_.n && contains_mask(s.mask());
}

bool SetFamily::insert(const KSubset& s) {
  if (s.n() != params_.n || s.k() != params_.k) {
    throw std::invalid_argument("member {" + s.to_string() +
                                "} does not match family parameters");
  }
  auto it = std::lower_bound(masks_.begin(), masks_.end(), s.mask());
  if (it != masks_.end() && *it == s.mask()) return false;
  masks_.insert(it, s.mask());
  return true;
}

std::vector<KSubset> SetFamily::members() const {
  std::vector<KSubset> out;
  out.reserve(masks_.size());
  for (Mask m : masks_) out.push_back(KSubset::from_mask(params_.n, m));
  return out;
}

Mask SetFamily::common_elements() const {
  Mask acc = ground_mask(params_.n);
  for (Mask m : masks_) acc &= m;
  return acc;
}

Mask SetFamily::union_elements() const {
  Mask acc = 0;
  for (Mask m : masks_) acc |= m;
  return acc;
}

SetFamily family_complement(const SetFamily& f) {
  const Params& p = f.params();
  const Mask ground = ground_mask(p.n);
  std::vector<Mask> out;
  out.reserve(f.size());
  for (Mask m : f.masks()) out.push_back(ground & ~m);
  return SetFamily::from_masks(Params(p.n, p.l()), std::move(out));
}

SetFamily restrict_family(const SetFamily& f, int required, int forbidden) {
  const Params& p = f.params();
  if (required == forbidden) {
    throw std::invalid_argument("restrict: required and forbidden coincide");
  }
  if (required < 1 || required > p.n || forbidden < 1 || forbidden > p.n) {
    throw std::invalid_argument("restrict: element outside [1, n]");
  }
  if (p.k == 0) return SetFamily(p);
  const Mask j = element_bit(required);
  const Mask i = element_bit(forbidden);
  std::vector<Mask> out;
  for (Mask m : f.masks()) {
    if ((m & j) != 0 && (m & i) == 0) out.push_back(m & ~j);
  }
  return SetFamily::from_masks(Params(p.n, p.k - 1), std::move(out));
}

SetFamily full_layer(Params params) {
  std::vector<Mask> out;
  out.reserve(static_cast<std::size_t>(params.layer_size()));
  for_each_k_subset(params.n, params.k, [&](Mask m) { out.push_back(m); });
  return SetFamily::from_masks(params, std::move(out));
}

}  // namespace crossfam
