#include "crossfam/orders.hpp"

#include <stdexcept>
#include <string>

namespace crossfam {

namespace {

// Combinatorial number system: sum over sorted elements e_1 < ... < e_k of
// C(e_j - 1, j).
Count colex_rank(Mask bits) {
  Count r = 0;
  int j = 1;
  for (Mask rest = bits; rest != 0; rest &= rest - 1, ++j) {
    r += binom(std::countr_zero(rest), j);
  }
  return r;
}

Mask colex_unrank(Count r, int n, int k) {
  Mask bits = 0;
  int hi = n - 1;
  for (int j = k; j >= 1; --j) {
    int c = hi;
    while (binom(c, j) > r) --c;
    bits |= Mask{1} << c;
    r -= binom(c, j);
    hi = c - 1;
  }
  return bits;
}

Mask reflect_mask(Mask bits, int n) {
  Mask out = 0;
  for (Mask rest = bits; rest != 0; rest &= rest - 1) {
    out |= Mask{1} << (n - 1 - std::countr_zero(rest));
  }
  return out;
}

void require_same_layer(const KSubset& a, const KSubset& b) {
  if (a.n() != b.n() || a.k() != b.k()) {
    throw std::invalid_argument("compare: subsets from different layers");
  }
}

}  // namespace

std::string_view to_string(OrderKind order) {
  switch (order) {
    case OrderKind::lex:
      return "lex";
    case OrderKind::colex:
      return "colex";
    case OrderKind::revcolex:
      return "revcolex";
  }
  return "?";
}

OrderKind parse_order(std::string_view text) {
  if (text == "lex") return OrderKind::lex;
  if (text == "colex") return OrderKind::colex;
  if (text == "revcolex") return OrderKind::revcolex;
  throw std::invalid_argument("unknown order '" + std::string(text) +
                              "' (expected lex, colex or revcolex)");
}

SegmentSpec::SegmentSpec(OrderKind order_, Params params_, Count size_)
    : order(order_), params(params_), size(size_) {
  if (size > params.layer_size()) {
    throw std::out_of_range("segment size " + std::to_string(size) +
                            " exceeds C(" + std::to_string(params.n) + ", " +
                            std::to_string(params.k) + ")");
  }
}

std::strong_ordering compare(const KSubset& a, const KSubset& b,
                             OrderKind order) {
  require_same_layer(a, b);
  const Mask diff = a.mask() ^ b.mask();
  if (diff == 0) return std::strong_ordering::equal;
  bool a_first = false;
  switch (order) {
    case OrderKind::lex:
      a_first = (a.mask() & (diff & (~diff + 1))) != 0;
      break;
    case OrderKind::colex:
      a_first = (b.mask() & std::bit_floor(diff)) != 0;
      break;
    case OrderKind::revcolex:
      a_first = (b.mask() & (diff & (~diff + 1))) != 0;
      break;
  }
  return a_first ? std::strong_ordering::less : std::strong_ordering::greater;
}

Count rank(const KSubset& s, OrderKind order) {
  switch (order) {
    case OrderKind::colex:
      return colex_rank(s.mask());
    case OrderKind::revcolex:
      return colex_rank(reflect_mask(s.mask(), s.n()));
    case OrderKind::lex:
      // Lex is the reverse of revcolex.
      return binom(s.n(), s.k()) - 1 -
             colex_rank(reflect_mask(s.mask(), s.n()));
  }
  return 0;
}

KSubset unrank(Count r, OrderKind order, Params params) {
  const Count total = params.layer_size();
  if (r >= total) {
    throw std::out_of_range("rank " + std::to_string(r) +
                            " outside [0, C(n, k)) = [0, " +
                            std::to_string(total) + ")");
  }
  Mask bits = 0;
  switch (order) {
    case OrderKind::colex:
      bits = colex_unrank(r, params.n, params.k);
      break;
    case OrderKind::revcolex:
      bits = reflect_mask(colex_unrank(r, params.n, params.k), params.n);
      break;
    case OrderKind::lex:
      bits = reflect_mask(colex_unrank(total - 1 - r, params.n, params.k),
                          params.n);
      break;
  }
  return KSubset::from_mask(params.n, bits);
}

SetFamily initial_segment(const SegmentSpec& spec) {
  std::vector<Mask> out;
  out.reserve(static_cast<std::size_t>(spec.size));
  const int n = spec.params.n;
  const int k = spec.params.k;
  if (spec.order == OrderKind::colex || spec.order == OrderKind::revcolex) {
    // Colex order on masks is numeric order restricted to the layer.
    Mask x = ground_mask(k);
    for (Count taken = 0; taken < spec.size; ++taken) {
      out.push_back(spec.order == OrderKind::colex ? x : reflect_mask(x, n));
      x = next_same_popcount(x);
    }
  } else {
    for (Count r = 0; r < spec.size; ++r) {
      out.push_back(unrank(r, OrderKind::lex, spec.params).mask());
    }
  }
  return SetFamily::from_masks(spec.params, std::move(out));
}

KSubset reflect(const KSubset& s) {
  return KSubset::from_mask(s.n(), reflect_mask(s.mask(), s.n()));
}

bool rank_duality_check(const KSubset& s) {
  const Count last = binom(s.n(), s.k()) - 1;
  const KSubset c = complement(s);
  const Count lex = rank(s, OrderKind::lex);
  return rank(s, OrderKind::revcolex) == last - lex &&
         rank(c, OrderKind::colex) == last - rank(s, OrderKind::colex) &&
         rank(c, OrderKind::revcolex) == lex;
}

}  // namespace crossfam
