#pragma once

#include "upsub/dyadic.hpp"

#include <map>
#include <optional>
#include <vector>

namespace upsub {

/// Multi-index in Z^d. std::vector comparison is lexicographic, which is the
/// canonical ordering used for iteration, serialization and accumulation.
using IndexVector = std::vector<int>;

/// Nonzero direction vector in N_0^d.
class Direction {
public:
  explicit Direction(IndexVector v);
  Direction(std::initializer_list<int> v) : Direction(IndexVector(v)) {}

  const IndexVector& vec() const { return v_; }
  int dim() const { return static_cast<int>(v_.size()); }

  friend bool operator==(const Direction&, const Direction&) = default;
  friend auto operator<=>(const Direction& a, const Direction& b) { return a.v_ <=> b.v_; }

private:
  IndexVector v_;
};

/// Unordered collection of directions with repetitions (the D of a factored
/// symbol). Kept sorted so equal multisets compare equal.
class DirectionMultiset {
public:
  DirectionMultiset() = default;
  explicit DirectionMultiset(std::vector<Direction> dirs);

  void add(const Direction& d);
  bool empty() const { return dirs_.empty(); }
  std::size_t size() const { return dirs_.size(); }
  const std::vector<Direction>& directions() const { return dirs_; }

  friend bool operator==(const DirectionMultiset&, const DirectionMultiset&) = default;

private:
  std::vector<Direction> dirs_;
};

/// Exactly d linearly independent directions in N_0^d.
class Basis {
public:
  explicit Basis(std::vector<Direction> dirs);

  int dim() const { return static_cast<int>(dirs_.size()); }
  const Direction& at(int i) const { return dirs_.at(i); }
  const std::vector<Direction>& directions() const { return dirs_; }

  /// e_1, ..., e_d.
  static Basis canonical(int dim);

  friend bool operator==(const Basis&, const Basis&) = default;

private:
  std::vector<Direction> dirs_;
};

/// Finitely supported mask a: Z^d -> dyadic rationals, equivalently a Laurent
/// polynomial a(z) = sum a(alpha) z^alpha with exact coefficients. Zero
/// coefficients are never stored. The builders below anchor their masks to
/// N_0^d (minimal exponent 0 per coordinate); general masks may live anywhere
/// on Z^d, e.g. differences or division quotients.
class Mask {
public:
  explicit Mask(int dim);

  /// The Kronecker delta at the origin.
  static Mask delta(int dim);

  int dim() const { return dim_; }
  std::size_t size() const { return coef_.size(); }
  bool empty() const { return coef_.empty(); }

  const std::map<IndexVector, Dyadic>& coefficients() const { return coef_; }
  Dyadic at(const IndexVector& alpha) const;
  void set(const IndexVector& alpha, const Dyadic& value);
  void add_to(const IndexVector& alpha, const Dyadic& value);

  Dyadic sum() const;

  IndexVector min_corner() const;
  IndexVector max_corner() const;

  Mask shifted(const IndexVector& by) const;
  /// Translate so the minimal exponent per coordinate is 0.
  Mask anchored() const;
  Mask scaled(const Dyadic& c) const;
  /// Substitute z -> z^factor, i.e. spread indices by an integer factor >= 1.
  Mask upsampled(int factor) const;

  friend bool operator==(const Mask&, const Mask&) = default;

private:
  int dim_;
  std::map<IndexVector, Dyadic> coef_;
};

Mask add(const Mask& a, const Mask& b);
Mask subtract(const Mask& a, const Mask& b);

/// Elementary smoothing factor (1 + z^v)/2.
Mask smoothing_factor(const Direction& v, int dim);

/// s_D(z) = prod_{v in D} (1 + z^v)/2; the empty product is delta.
Mask directional_product(const DirectionMultiset& D, int dim);

/// Full smoothing factor s_V over a basis V: product of the d directional
/// factors of V.
Mask full_smoothing_factor(const Basis& V);

/// Univariate B-spline mask (1+z)^(m+1) / 2^m on {0..m+1}.
Mask bspline_mask(int m);

/// Bivariate three-direction box spline mask
/// ((1+z1)(1+z2)(1+z1 z2))^(m+1) / 2^(3m+1).
Mask box3_mask(int m);

/// Coefficient-wise convolution, i.e. the product a(z) b(z).
Mask product(const Mask& a, const Mask& b);

/// Exact quotient a / f in the dyadic coefficient ring, or nullopt when f
/// does not divide a. Elimination runs in graded-lex term order; the quotient
/// is unique, so the order only affects the path, not the answer.
std::optional<Mask> divide_exact(const Mask& a, const Mask& f);

/// The 2^d coset sums sum_beta a(eps + 2 beta), eps in {0,1}^d. Entry i uses
/// eps with bit j of i giving the parity of coordinate j (bit 0 = first
/// coordinate). All-ones is the sum rule every convergent scheme satisfies.
std::vector<Dyadic> submask_sums(const Mask& a);

bool is_nonnegative(const Mask& a);

/// True when every coset sum equals one.
bool satisfies_sum_rule(const Mask& a);

/// Backward difference f - f(. - v), acting on a mask viewed as data.
Mask backward_difference(const Mask& f, const Direction& v);

/// Decompose a = c * s_D with c a positive dyadic constant and D a direction
/// multiset, or nullopt when a has no such form. Candidate directions are the
/// anchored support points; the search backtracks, so the answer does not
/// depend on division order. Only anchored masks qualify (a translate of a
/// smoothing product is not itself one).
std::optional<std::pair<Dyadic, DirectionMultiset>> smoothing_product_decomposition(const Mask& a);

} // namespace upsub
