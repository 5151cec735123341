#pragma once

#include "upsub/mask.hpp"
#include "upsub/rational.hpp"
#include "upsub/subdivision.hpp"

#include <optional>
#include <vector>

namespace upsub {

enum class Family { kUnivariateUp, kBivariateUp, kPowers, kExplicit };

/// Level-dependent mask sequence a_0, a_1, a_2, ... driving a non-stationary
/// scheme. Three preset families follow the law m = floor(k / r):
///
///   univariate_up(r):  a_k = (1+z)^(m+1) / 2^m            (B-spline masks)
///   bivariate_up(r):   a_k = three-direction box spline mask of order m
///   powers(a, r):      a_k = 2^(-d m) a^(m+1)
///
/// Explicit lists repeat their last mask for indices past the end.
class MaskSequence {
public:
  static MaskSequence univariate_up(int r);
  static MaskSequence bivariate_up(int r);
  static MaskSequence powers(Mask a, int r);
  /// lambda_law, when given, asserts the support scale of mask(k) relative to
  /// mask(0); support prediction verifies it exactly.
  static MaskSequence explicit_list(std::vector<Mask> masks,
                                    std::vector<Rational> lambda_law = {});

  Family family() const { return family_; }
  int dim() const { return dim_; }
  /// Levels per smoothing increment; 0 for explicit lists.
  int period() const { return r_; }
  /// Number of explicitly stored masks (explicit lists only, else 0).
  std::size_t explicit_count() const { return masks_.size(); }
  const std::vector<Rational>& lambda_law() const { return lambda_law_; }

  Mask mask(int k) const;

  /// floor(k / r) for the preset families, nullopt for explicit lists.
  std::optional<int> law_exponent(int k) const;

  /// Factorization base * s_D * prod s_V of mask(k) into the shape the
  /// difference-scheme machinery consumes:
  ///   univariate_up: base (1+z),            m    full factors {(1)}
  ///   bivariate_up:  base 2 + 2 z1 z2,      m+1  full factors {e1,e2},
  ///                  D = m copies of (1,1)
  ///   powers:        base a itself when a = 2^d s_D0 with D0 containing a
  ///                  basis V; m full factors V, D = m copies of D0 \ V
  /// nullopt for explicit lists and for powers bases without that shape.
  std::optional<FactoredSymbol> canonical_factorization(int k) const;

  /// Ratio of the limit support to Esupp(mask(0)) for the presets:
  /// 2^r / (2^r - 1). Throws for explicit lists.
  Rational support_scale() const;

private:
  MaskSequence() = default;

  Family family_ = Family::kExplicit;
  int dim_ = 0;
  int r_ = 0;
  Mask powers_base_{1};
  std::vector<Mask> masks_;
  std::vector<Rational> lambda_law_;
};

} // namespace upsub
