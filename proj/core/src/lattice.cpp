#include "upsub/lattice.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace upsub {

std::int64_t Box::num_points() const {
  std::int64_t n = 1;
  for (int i = 0; i < dim(); ++i) {
    if (hi[i] < lo[i]) throw std::invalid_argument("box: hi < lo");
    const std::int64_t extent = std::int64_t(hi[i]) - lo[i] + 1;
    if (n > std::numeric_limits<std::int64_t>::max() / extent)
      throw std::overflow_error("box: point count overflows");
    n *= extent;
  }
  return n;
}

bool Box::contains(const IndexVector& alpha) const {
  for (int i = 0; i < dim(); ++i)
    if (alpha[i] < lo[i] || alpha[i] > hi[i]) return false;
  return true;
}

std::int64_t Box::linear_index(const IndexVector& alpha) const {
  std::int64_t idx = 0;
  for (int i = 0; i < dim(); ++i)
    idx = idx * (std::int64_t(hi[i]) - lo[i] + 1) + (alpha[i] - lo[i]);
  return idx;
}

IndexVector Box::index_at(std::int64_t linear) const {
  IndexVector alpha(dim());
  for (int i = dim() - 1; i >= 0; --i) {
    const std::int64_t extent = std::int64_t(hi[i]) - lo[i] + 1;
    alpha[i] = static_cast<int>(linear % extent) + lo[i];
    linear /= extent;
  }
  return alpha;
}

LatticeData::LatticeData(int level, Box window)
    : level_(level), window_(std::move(window)) {
  if (level < 0) throw std::invalid_argument("lattice data: negative level");
  values_.assign(static_cast<std::size_t>(window_.num_points()), 0.0);
}

LatticeData LatticeData::delta(int dim) {
  LatticeData d(0, Box{IndexVector(dim, 0), IndexVector(dim, 0)});
  d.values_[0] = 1.0;
  return d;
}

double LatticeData::at(const IndexVector& alpha) const {
  if (!window_.contains(alpha)) return 0.0;
  return values_[static_cast<std::size_t>(window_.linear_index(alpha))];
}

void LatticeData::set(const IndexVector& alpha, double value) {
  if (!window_.contains(alpha)) throw std::out_of_range("lattice data: index outside window");
  values_[static_cast<std::size_t>(window_.linear_index(alpha))] = value;
}

double LatticeData::sup_norm() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::fabs(v));
  return m;
}

std::vector<double> LatticeData::physical(const IndexVector& alpha) const {
  std::vector<double> x(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) x[i] = std::ldexp(double(alpha[i]), -level_);
  return x;
}

LatticeData backward_difference(const LatticeData& f, const Direction& v) {
  if (v.dim() != f.dim()) throw std::invalid_argument("backward difference: dimension mismatch");
  Box w = f.window();
  for (int i = 0; i < w.dim(); ++i) w.hi[i] += v.vec()[i];
  LatticeData g(f.level(), w);
  const std::int64_t n = w.num_points();
  for (std::int64_t p = 0; p < n; ++p) {
    IndexVector alpha = w.index_at(p);
    IndexVector prev = alpha;
    for (int i = 0; i < w.dim(); ++i) prev[i] -= v.vec()[i];
    g.values()[static_cast<std::size_t>(p)] = f.at(alpha) - f.at(prev);
  }
  return g;
}

LatticeData iterated_backward_difference(const LatticeData& f, const Direction& v, int order) {
  if (order < 0) throw std::invalid_argument("backward difference: negative order");
  LatticeData g = f;
  for (int i = 0; i < order; ++i) g = backward_difference(g, v);
  return g;
}

} // namespace upsub
