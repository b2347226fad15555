#include "crossfam/shadows.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "crossfam/orders.hpp"

namespace crossfam {

SetFamily shadow(const SetFamily& f, int t) {
  const Params& p = f.params();
  if (t < 0 || t > p.k) {
    throw std::invalid_argument("shadow: t=" + std::to_string(t) +
                                " outside [0, k=" + std::to_string(p.k) + "]");
  }
  if (t == p.k) return f;
  std::vector<Mask> out;
  std::unordered_set<Mask> seen;
  for (Mask m : f.masks()) {
    for_each_sub_k_subset(m, t, [&](Mask sub) {
      if (seen.insert(sub).second) out.push_back(sub);
    });
  }
  return SetFamily::from_masks(Params(p.n, t), std::move(out));
}

ShadowQuery::ShadowQuery(Params params_, int t_, Count m_)
    : params(params_), t(t_), m(m_) {
  if (t < 0 || t > params.k) {
    throw std::invalid_argument("shadow query: t outside [0, k]");
  }
  if (m > params.layer_size()) {
    throw std::invalid_argument("shadow query: m exceeds C(n, k)");
  }
}

std::vector<CascadeTerm> cascade(Count m, int k) {
  std::vector<CascadeTerm> terms;
  // Tops never exceed the previous top minus one; the first is below 68
  // whenever m <= C(67, k), which covers every layer with n <= 64.
  int top = 68;
  for (int level = k; level >= 1 && m > 0; --level) {
    int a = top - 1;
    while (binom(a, level) > m) --a;
    terms.push_back({a, level});
    m -= binom(a, level);
    top = a;
  }
  if (m != 0) {
    throw std::invalid_argument("cascade: m too large for 64-bit tops");
  }
  return terms;
}

Count kk_min_shadow_segment(const ShadowQuery& q) {
  if (q.m == 0) return 0;
  const SetFamily segment =
      initial_segment(SegmentSpec(OrderKind::colex, q.params, q.m));
  return shadow(segment, q.t).size();
}

Count kk_min_shadow_cascade(const ShadowQuery& q) {
  if (q.m == 0) return 0;
  const int drop = q.params.k - q.t;
  Count total = 0;
  for (const auto& term : cascade(q.m, q.params.k)) {
    total = checked_add(total, binom(term.top, term.level - drop));
  }
  return total;
}

Count kk_min_shadow(const ShadowQuery& q) {
  return q.m <= kSegmentPathLimit ? kk_min_shadow_segment(q)
                                  : kk_min_shadow_cascade(q);
}

double real_binom(double x, int k) {
  if (k < 0) return 0.0;
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= (x - i) / (i + 1);
  return r;
}

namespace {

double real_binom_derivative(double x, int k) {
  // d/dx prod (x - i)/(i + 1) = C(x, k) * sum 1/(x - i), expanded to avoid
  // division by zero at the roots.
  double sum = 0.0;
  for (int skip = 0; skip < k; ++skip) {
    double term = 1.0 / (skip + 1);
    for (int i = 0; i < k; ++i) {
      if (i != skip) term *= (x - i) / (i + 1);
    }
    sum += term;
  }
  return sum;
}

}  // namespace

LovaszRoot lovasz_root(std::int64_t m, int k) {
  if (m < 0) throw std::invalid_argument("lovasz_root: m < 0");
  if (k < 1) throw std::invalid_argument("lovasz_root: k < 1");
  const double target = static_cast<double>(m);
  const double tol = std::max(kLovaszTolerance * target, kLovaszTolerance);
  double lo = k - 1;
  double hi = k - 1 + target;
  if (m == 0) return {lo, 0, k};
  for (int iter = 0; iter < 400 && hi - lo > 1e-15 * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (real_binom(mid, k) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 8; ++iter) {
    const double err = real_binom(x, k) - target;
    if (std::fabs(err) <= tol * 1e-3) break;
    const double slope = real_binom_derivative(x, k);
    if (slope <= 0.0) break;
    const double next = x - err / slope;
    if (next < k - 1 || !std::isfinite(next)) break;
    x = next;
  }
  if (std::fabs(real_binom(x, k) - target) > tol) {
    throw std::runtime_error("lovasz_root: did not converge for m=" +
                             std::to_string(m));
  }
  return {x, static_cast<Count>(m), k};
}

double lovasz_bound(std::int64_t m, int k, int t) {
  if (t < 0 || t > k) {
    throw std::invalid_argument("lovasz_bound: t outside [0, k]");
  }
  if (m == 0) return 0.0;
  return real_binom(lovasz_root(m, k).x, t);
}

Count mors_bound(int n, int l, int t) {
  if (!(n >= l && l > t && t >= 1)) {
    throw std::invalid_argument("mors_bound: requires n >= l > t >= 1");
  }
  return checked_add(binom(n - 1, t), binom(l - 1, t - 1));
}

}  // namespace crossfam
