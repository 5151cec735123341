#include "upsub/runner.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace upsub {

CascadeResult cascade(const MaskSequence& seq, int levels, const LatticeData& initial,
                      const SubdivisionOptions& opts) {
  if (levels < 1)
    throw std::invalid_argument("cascade: need at least one level");
  if (seq.dim() != initial.dim())
    throw std::invalid_argument("cascade: dimension mismatch");
  CascadeResult out;
  out.levels.reserve(std::size_t(levels) + 1);
  out.levels.push_back(initial);
  for (int k = 0; k < levels; ++k)
    out.levels.push_back(apply_subdivision(seq.mask(k), out.levels.back(), opts));
  return out;
}

CascadeResult cascade(const MaskSequence& seq, int levels, const SubdivisionOptions& opts) {
  return cascade(seq, levels, LatticeData::delta(seq.dim()), opts);
}

CascadeResult stationary_blf(const Mask& a, int levels, const SubdivisionOptions& opts) {
  return cascade(MaskSequence::explicit_list({a}), levels, opts);
}

FrozenLimitSample frozen_limit(const MaskSequence& seq, int k, int inner,
                               const SubdivisionOptions& opts) {
  if (k < 0)
    throw std::invalid_argument("frozen_limit: negative ladder index");
  if (inner < 1)
    throw std::invalid_argument("frozen_limit: need at least one inner step");
  LatticeData cur = LatticeData::delta(seq.dim());
  for (int i = 0; i < k; ++i)
    cur = apply_subdivision(seq.mask(i), cur, opts);
  const Mask frozen = seq.mask(k);
  for (int i = 0; i < inner; ++i)
    cur = apply_subdivision(frozen, cur, opts);
  return FrozenLimitSample{k, inner, std::move(cur)};
}

double ladder_gap(const MaskSequence& seq, int k, int n, int common_level,
                  const SubdivisionOptions& opts) {
  if (k < 0 || n < 0)
    throw std::invalid_argument("ladder_gap: negative index");
  if (common_level < k + n + 1)
    throw std::invalid_argument("ladder_gap: common level too shallow for both members");
  const LatticeData a = frozen_limit(seq, k, common_level - k, opts).samples;
  const LatticeData b = frozen_limit(seq, k + n, common_level - k - n, opts).samples;

  const int d = a.dim();
  Box u;
  u.lo.resize(std::size_t(d));
  u.hi.resize(std::size_t(d));
  for (int i = 0; i < d; ++i) {
    u.lo[i] = std::min(a.window().lo[i], b.window().lo[i]);
    u.hi[i] = std::max(a.window().hi[i], b.window().hi[i]);
  }

  double sup = 0.0;
  IndexVector gamma = u.lo;
  const std::int64_t total = u.num_points();
  for (std::int64_t t = 0; t < total; ++t) {
    sup = std::max(sup, std::fabs(a.at(gamma) - b.at(gamma)));
    for (int i = d - 1; i >= 0; --i) {
      if (gamma[i] < u.hi[i]) {
        ++gamma[i];
        break;
      }
      gamma[i] = u.lo[i];
    }
  }
  return sup;
}

std::vector<double> smoothness_probe(const CascadeResult& result, int order,
                                     const Direction& v) {
  if (order < 1)
    throw std::invalid_argument("smoothness_probe: order must be >= 1");
  if (result.levels.size() < 2)
    throw std::invalid_argument("smoothness_probe: need at least two levels");

  std::vector<double> g;
  g.reserve(result.levels.size());
  for (const auto& f : result.levels) {
    const LatticeData diff = iterated_backward_difference(f, v, order);
    g.push_back(std::ldexp(diff.sup_norm(), f.level() * (order - 1)));
  }

  std::vector<double> ratios;
  ratios.reserve(g.size() - 1);
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    if (g[i] == 0.0)
      ratios.push_back(g[i + 1] == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    else
      ratios.push_back(g[i + 1] / g[i]);
  }
  return ratios;
}

} // namespace upsub
