#pragma once

#include "upsub/mask.hpp"

#include <cstdint>
#include <vector>

namespace upsub {

/// Inclusive axis-aligned index box in Z^d.
struct Box {
  IndexVector lo, hi;

  int dim() const { return static_cast<int>(lo.size()); }
  std::int64_t num_points() const;
  bool contains(const IndexVector& alpha) const;

  /// Row-major linearization: first coordinate slowest, so walking linear
  /// indices visits multi-indices in lexicographic order.
  std::int64_t linear_index(const IndexVector& alpha) const;
  IndexVector index_at(std::int64_t linear) const;

  friend bool operator==(const Box&, const Box&) = default;
};

/// Dense real-valued data on the grid 2^{-level} Z^d over an index window.
/// Values are doubles; the exact verification paths act on Mask-as-data
/// instead of this type.
class LatticeData {
public:
  LatticeData(int level, Box window);

  /// Kronecker delta: level 0, single-point window at the origin.
  static LatticeData delta(int dim);

  int dim() const { return window_.dim(); }
  int level() const { return level_; }
  const Box& window() const { return window_; }

  double at(const IndexVector& alpha) const;
  void set(const IndexVector& alpha, double value);

  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

  double sup_norm() const;

  /// Physical coordinate of an index: alpha * 2^{-level}.
  std::vector<double> physical(const IndexVector& alpha) const;

private:
  int level_;
  Box window_;
  std::vector<double> values_;
};

/// Backward difference f - f(. - v).
LatticeData backward_difference(const LatticeData& f, const Direction& v);
LatticeData iterated_backward_difference(const LatticeData& f, const Direction& v, int order);

} // namespace upsub
