#pragma once

#include "upsub/lattice.hpp"
#include "upsub/sequence.hpp"
#include "upsub/subdivision.hpp"

#include <vector>

namespace upsub {

struct CascadeResult {
  /// levels[k] holds f^[k]; levels[0] is the initial data.
  std::vector<LatticeData> levels;

  const LatticeData& deepest() const { return levels.back(); }
};

/// Run `levels` steps of the non-stationary scheme, f^[k+1] = S_{a_k} f^[k],
/// keeping every level. Defaults to the Kronecker delta as initial data.
CascadeResult cascade(const MaskSequence& seq, int levels, const LatticeData& initial,
                      const SubdivisionOptions& opts = {});
CascadeResult cascade(const MaskSequence& seq, int levels, const SubdivisionOptions& opts = {});

/// Cascade with a single fixed mask (the stationary scheme of a).
CascadeResult stationary_blf(const Mask& a, int levels, const SubdivisionOptions& opts = {});

/// Sample of the k-th frozen-mask ladder member: k non-stationary steps, then
/// `inner` further steps with the mask frozen at index k. Only the final grid
/// is kept, so deep runs never hold more than two levels in memory.
struct FrozenLimitSample {
  int k;
  int inner;
  LatticeData samples;
};

FrozenLimitSample frozen_limit(const MaskSequence& seq, int k, int inner,
                               const SubdivisionOptions& opts = {});

/// Sup-norm distance between ladder members k and k+n, both refined down to
/// the common grid 2^{-common_level} (their inner step counts are
/// common_level - k and common_level - k - n). Requires common_level >=
/// k + n + 1 so the deeper member still gets one inner step.
double ladder_gap(const MaskSequence& seq, int k, int n, int common_level,
                  const SubdivisionOptions& opts = {});

/// Decay probe for C^{order-1} behavior: per level l the quantity
/// g_l = 2^{l * (order-1)} sup |grad_v^order f^[l]|, returned as consecutive
/// ratios g_{l+1} / g_l. Limits with order-1 continuous derivatives need
/// g_l -> 0, so ratios settling below 1 are consistent with that much
/// regularity while ratios pinned at or above 1 are not. This is a
/// diagnostic, not a certificate: finitely many levels cannot decide
/// smoothness. A 0/0 ratio reports 0, x/0 reports +inf.
std::vector<double> smoothness_probe(const CascadeResult& result, int order,
                                     const Direction& v);

} // namespace upsub
