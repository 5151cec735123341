#pragma once

#include "upsub/lattice.hpp"
#include "upsub/polytope.hpp"
#include "upsub/sequence.hpp"

#include <optional>
#include <stdexcept>

namespace upsub {

/// The masks of a sequence fail the support growth law required for a
/// compact limit support: Esupp(a_k) = lambda_k Esupp(a_0) with lambda_k
/// monotone non-decreasing and summable against 2^{-(k+1)}.
class AssumptionViolation : public std::runtime_error {
public:
  explicit AssumptionViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Convex hull of the support indices of a nonzero mask, d <= 2.
ConvexPolytope extended_support(const Mask& a);

struct SupportPrediction {
  ConvexPolytope region;
  /// True when the infinite Minkowski series had a closed-form sum. False
  /// when the tail was over-bounded; region is then an outer bound only.
  bool exact;
};

/// Affine dominating law lambda_k <= c0 + c1 k for k >= tail_from, used to
/// over-bound the support series tail of an explicit sequence expected to
/// keep growing past its stored masks.
struct AffineTailBound {
  Rational c0, c1;
};

/// Limit support of the scheme: the Minkowski series sum_k 2^{-(k+1)}
/// Esupp(a_k), which collapses to (sum_k 2^{-(k+1)} lambda_k) Esupp(a_0)
/// under the growth law. Presets are summed in closed form. Explicit lists
/// are verified index by index up to max(tail_from, stored count - 1); their
/// repeat-last tail sums exactly unless an affine bound is supplied, in which
/// case the result is an outer bound. Throws AssumptionViolation when the
/// growth law fails on the verified range.
SupportPrediction predicted_support(const MaskSequence& seq, int tail_from = 0,
                                    const std::optional<AffineTailBound>& tail = std::nullopt);

/// (1 + 1/(2^r - 1)) Esupp(mask(0)) for the two Up-like preset families.
ConvexPolytope closed_form_support(Family family, int r);

/// Hull of the grid points carrying |value| > tau, in physical coordinates
/// (indices scaled by 2^{-level}). tau = 0 keeps every nonzero sample, which
/// is the right reading for nonnegative masks (no cancellation can occur).
ConvexPolytope empirical_support(const LatticeData& data, double tau = 0.0);

} // namespace upsub
