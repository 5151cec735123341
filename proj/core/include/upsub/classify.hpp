#pragma once

#include "upsub/mask.hpp"
#include "upsub/sequence.hpp"
#include "upsub/subdivision.hpp"

#include <optional>
#include <vector>

namespace upsub {

/// Assigns a basis to each full-factor slot j = 1, 2, ...; either one fixed
/// basis or an explicit list whose last entry repeats.
class BasisSequence {
public:
  static BasisSequence constant(Basis v);
  static BasisSequence list(std::vector<Basis> entries);

  int dim() const { return entries_.front().dim(); }
  /// Basis for slot j (1-based).
  const Basis& at(int j) const;

private:
  explicit BasisSequence(std::vector<Basis> entries) : entries_(std::move(entries)) {}
  std::vector<Basis> entries_;
};

struct ExtractionResult {
  int count = 0;
  Mask residual;
};

/// Divide a by s_{V_1}, then s_{V_2}, ... as long as the division is exact
/// and the quotient stays nonconstant, up to max_factors extractions. The
/// nonconstant rule keeps the final factor in the residual, so the residual
/// is always a usable base rather than a bare constant.
ExtractionResult extract_full_factors(const Mask& a, const BasisSequence& v, int max_factors);

enum class BaseConvergence {
  /// Contractivity of base * s_V certifies a convergent scheme for that
  /// product (the premise the difference-scheme machinery needs).
  kCertified,
  /// The base is a positive constant times smoothing factors; its own
  /// stationary scheme is Haar-like and its convergence premise is doubtful,
  /// even though base * s_V certifies. Flagged, not failed.
  kHeuristic,
  kFailed,
};

struct BaseFlags {
  bool positive = false;
  bool sum_rule = false;
  BaseConvergence convergence = BaseConvergence::kFailed;
};

struct ClassifyOptions {
  int max_full_factors = 64;
  int max_contractivity_power = 4;
  /// Peeling directions tried besides {e_1..e_d, (1,...,1)}.
  std::vector<Direction> extra_pool;
};

struct ClassReport {
  /// Number of certified full smoothing factors.
  int j = 0;
  Mask base{1};
  DirectionMultiset extra;
  std::vector<Basis> full_factors;
  BaseFlags flags;
  /// Present when the base qualifies (positive); reconstructs the input.
  std::optional<FactoredSymbol> factorization;
};

/// Factor a into base * s_D * prod_{i<=j} s_{V_i}: greedy full-factor
/// extraction, then directional peeling of the residual over the pool, then
/// base flags. Never throws on unfactorable input; it degrades to j = 0 with
/// the mask itself as base.
ClassReport classify(const Mask& a, const BasisSequence& v, const ClassifyOptions& opts = {});

struct SequenceSmoothnessReport {
  std::vector<ClassReport> per_mask;
  std::vector<int> j;
  /// Largest over window starts m <= horizon/2 of min_{m <= k < horizon} j_k,
  /// and the smallest m attaining it. Limits are then (j_star - 1)-times
  /// continuously differentiable, premises permitting.
  int j_star = 0;
  int window_start = 0;
  bool monotone = false;
  /// Weakest base-convergence flag over masks k >= window_start.
  BaseConvergence weakest = BaseConvergence::kFailed;
  /// Preset families only: j follows floor(k / period) with this period,
  /// which is monotone unbounded, so the scheme's limit is C-infinity.
  std::optional<int> law_period;
  bool c_infinity = false;
};

SequenceSmoothnessReport sequence_smoothness_report(const MaskSequence& seq,
                                                    const BasisSequence& v, int horizon,
                                                    const ClassifyOptions& opts = {});

} // namespace upsub
