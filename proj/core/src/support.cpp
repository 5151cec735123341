#include "upsub/support.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace upsub {

namespace {

/// Max over vertices of the coordinate-sum |.|_1; positively homogeneous, so
/// it reads off the scale factor between a polytope and a scaled copy.
Rational one_norm_radius(const ConvexPolytope& p) {
  Rational best = 0;
  for (const auto& v : p.vertices()) {
    Rational s = 0;
    for (const auto& c : v.x)
      s += abs(c);
    best = std::max(best, s);
  }
  return best;
}

/// lambda with Esupp = lambda * E0, or nullopt when no such scale exists.
std::optional<Rational> scale_between(const ConvexPolytope& e0, const ConvexPolytope& ek,
                                      const Rational& r0) {
  if (r0 == 0) {
    if (ek == e0)
      return Rational(1);
    return std::nullopt;
  }
  const Rational lambda = one_norm_radius(ek) / r0;
  if (scale(e0, lambda) == ek)
    return lambda;
  return std::nullopt;
}

} // namespace

ConvexPolytope extended_support(const Mask& a) {
  if (a.empty())
    throw std::invalid_argument("extended_support: zero mask");
  if (a.dim() > 2)
    throw std::invalid_argument("extended_support: dimension above 2 unsupported");
  std::vector<RatPoint> pts;
  pts.reserve(a.size());
  for (const auto& [alpha, c] : a.coefficients()) {
    RatPoint p;
    p.x.reserve(alpha.size());
    for (int x : alpha)
      p.x.emplace_back(x);
    pts.push_back(std::move(p));
  }
  return ConvexPolytope::from_points(a.dim(), std::move(pts));
}

SupportPrediction predicted_support(const MaskSequence& seq, int tail_from,
                                    const std::optional<AffineTailBound>& tail) {
  const ConvexPolytope e0 = extended_support(seq.mask(0));
  if (seq.family() != Family::kExplicit)
    return SupportPrediction{scale(e0, seq.support_scale()), true};

  const int stored = static_cast<int>(seq.explicit_count());
  const int horizon = std::max(tail_from, stored - 1);
  const Rational r0 = one_norm_radius(e0);
  const auto& given = seq.lambda_law();

  std::vector<Rational> lambda(std::size_t(horizon) + 1);
  for (int k = 0; k <= horizon; ++k) {
    const auto lk = scale_between(e0, extended_support(seq.mask(k)), r0);
    if (!lk)
      throw AssumptionViolation("support of mask " + std::to_string(k) +
                                " is not a scaled copy of the first mask's support");
    if (!given.empty() && k < stored && given[std::size_t(k)] != *lk)
      throw AssumptionViolation("declared scale for mask " + std::to_string(k) +
                                " is " + rational_str(given[std::size_t(k)]) +
                                ", measured " + rational_str(*lk));
    if (k > 0 && *lk < lambda[std::size_t(k) - 1])
      throw AssumptionViolation("support scale decreases from mask " +
                                std::to_string(k - 1) + " to mask " + std::to_string(k));
    lambda[std::size_t(k)] = *lk;
  }

  // Partial series sum_{k<T} 2^{-(k+1)} lambda_k, then the tail from T.
  const int T = tail ? std::max(tail_from, 0) : stored - 1;
  Rational sigma = 0;
  for (int k = 0; k < T; ++k)
    sigma += lambda[std::size_t(k)] / Rational(BigInt(1) << (k + 1));
  const Rational pow_t = Rational(BigInt(1), BigInt(1) << T);

  if (!tail)
    // Repeat-last tail: sum_{k>=T} 2^{-(k+1)} lambda_T = lambda_T 2^{-T}, exact.
    return SupportPrediction{scale(e0, sigma + lambda[std::size_t(T)] * pow_t), true};

  for (int k = T; k <= horizon; ++k)
    if (lambda[std::size_t(k)] > tail->c0 + tail->c1 * k)
      throw AssumptionViolation("affine tail law fails to dominate scale of mask " +
                                std::to_string(k));
  // sum_{k>=T} 2^{-(k+1)} (c0 + c1 k) = (c0 + c1 (T+1)) 2^{-T}.
  sigma += (tail->c0 + tail->c1 * (T + 1)) * pow_t;
  return SupportPrediction{scale(e0, sigma), false};
}

ConvexPolytope closed_form_support(Family family, int r) {
  if (r < 1)
    throw std::invalid_argument("closed_form_support: r must be >= 1");
  const BigInt p = BigInt(1) << r;
  const Rational sigma(p, p - 1);
  switch (family) {
  case Family::kUnivariateUp:
    return ConvexPolytope::interval(0, sigma);
  case Family::kBivariateUp:
    return scale(extended_support(box3_mask(0)), sigma);
  default:
    throw std::invalid_argument("closed_form_support: only the Up-like presets have one");
  }
}

ConvexPolytope empirical_support(const LatticeData& data, double tau) {
  if (tau < 0)
    throw std::invalid_argument("empirical_support: negative threshold");
  const Box& w = data.window();
  const int d = data.dim();
  const BigInt denom = BigInt(1) << data.level();
  const double* v = data.values().data();

  std::vector<RatPoint> pts;
  if (d == 1) {
    const std::int64_t n = w.num_points();
    std::int64_t first = -1, last = -1;
    for (std::int64_t i = 0; i < n; ++i) {
      if (std::fabs(v[i]) > tau) {
        if (first < 0)
          first = i;
        last = i;
      }
    }
    if (first >= 0) {
      pts.push_back(RatPoint{{Rational(BigInt(w.lo[0] + first), denom)}});
      pts.push_back(RatPoint{{Rational(BigInt(w.lo[0] + last), denom)}});
    }
  } else if (d == 2) {
    const std::int64_t rows = w.hi[0] - w.lo[0] + 1;
    const std::int64_t cols = w.hi[1] - w.lo[1] + 1;
    for (std::int64_t i = 0; i < rows; ++i) {
      const double* row = v + i * cols;
      std::int64_t first = -1, last = -1;
      for (std::int64_t j = 0; j < cols; ++j) {
        if (std::fabs(row[j]) > tau) {
          if (first < 0)
            first = j;
          last = j;
        }
      }
      if (first < 0)
        continue;
      const Rational x(BigInt(w.lo[0] + i), denom);
      pts.push_back(RatPoint{{x, Rational(BigInt(w.lo[1] + first), denom)}});
      pts.push_back(RatPoint{{x, Rational(BigInt(w.lo[1] + last), denom)}});
    }
  } else {
    throw std::invalid_argument("empirical_support: dimension above 2 unsupported");
  }

  if (pts.empty())
    throw std::runtime_error("empirical_support: no samples above threshold");
  return ConvexPolytope::from_points(d, std::move(pts));
}

} // namespace upsub
