#include "upsub/mask.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace upsub {

namespace {

void check_same_dim(int a, int b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

/// Graded lexicographic term order (total degree first, then lex).
struct GrlexLess {
  bool operator()(const IndexVector& a, const IndexVector& b) const {
    long long da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da < db;
    return a < b;
  }
};

/// Fraction-free (Bareiss) elimination; exact, no rationals needed.
bool rows_independent(const std::vector<Direction>& dirs) {
  const int n = static_cast<int>(dirs.size());
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = dirs[i].vec()[j];
  BigInt prev = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r)
      if (m[r][k] != 0) { pivot = r; break; }
    if (pivot < 0) return false;
    std::swap(m[k], m[pivot]);
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt q, rem;
        boost::multiprecision::divide_qr(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev, q, rem);
        m[i][j] = q;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return m[n - 1][n - 1] != 0;
}

} // namespace

Direction::Direction(IndexVector v) : v_(std::move(v)) {
  if (v_.empty()) throw std::invalid_argument("direction: empty vector");
  bool nonzero = false;
  for (int x : v_) {
    if (x < 0) throw std::invalid_argument("direction: negative entry");
    if (x > 0) nonzero = true;
  }
  if (!nonzero) throw std::invalid_argument("direction: zero vector");
}

DirectionMultiset::DirectionMultiset(std::vector<Direction> dirs) : dirs_(std::move(dirs)) {
  std::sort(dirs_.begin(), dirs_.end());
  for (std::size_t i = 1; i < dirs_.size(); ++i)
    check_same_dim(dirs_[i].dim(), dirs_[0].dim(), "direction multiset");
}

void DirectionMultiset::add(const Direction& d) {
  if (!dirs_.empty()) check_same_dim(d.dim(), dirs_[0].dim(), "direction multiset");
  dirs_.insert(std::upper_bound(dirs_.begin(), dirs_.end(), d), d);
}

Basis::Basis(std::vector<Direction> dirs) : dirs_(std::move(dirs)) {
  if (dirs_.empty()) throw std::invalid_argument("basis: no directions");
  const int d = dirs_[0].dim();
  if (static_cast<int>(dirs_.size()) != d)
    throw std::invalid_argument("basis: need exactly d directions in dimension d");
  for (const auto& dir : dirs_) check_same_dim(dir.dim(), d, "basis");
  if (!rows_independent(dirs_))
    throw std::invalid_argument("basis: directions are linearly dependent");
}

Basis Basis::canonical(int dim) {
  std::vector<Direction> dirs;
  for (int i = 0; i < dim; ++i) {
    IndexVector e(dim, 0);
    e[i] = 1;
    dirs.emplace_back(std::move(e));
  }
  return Basis(std::move(dirs));
}

Mask::Mask(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("mask: dimension must be positive");
}

Mask Mask::delta(int dim) {
  Mask m(dim);
  m.set(IndexVector(dim, 0), Dyadic(1));
  return m;
}

Dyadic Mask::at(const IndexVector& alpha) const {
  auto it = coef_.find(alpha);
  return it == coef_.end() ? Dyadic(0) : it->second;
}

void Mask::set(const IndexVector& alpha, const Dyadic& value) {
  if (static_cast<int>(alpha.size()) != dim_)
    throw std::invalid_argument("mask: index dimension mismatch");
  if (value.is_zero())
    coef_.erase(alpha);
  else
    coef_[alpha] = value;
}

void Mask::add_to(const IndexVector& alpha, const Dyadic& value) {
  auto it = coef_.find(alpha);
  if (it == coef_.end()) {
    if (static_cast<int>(alpha.size()) != dim_)
      throw std::invalid_argument("mask: index dimension mismatch");
    if (!value.is_zero()) coef_.emplace(alpha, value);
    return;
  }
  it->second += value;
  if (it->second.is_zero()) coef_.erase(it);
}

Dyadic Mask::sum() const {
  Dyadic s(0);
  for (const auto& [alpha, w] : coef_) s += w;
  return s;
}

IndexVector Mask::min_corner() const {
  if (coef_.empty()) throw std::logic_error("mask: empty support");
  IndexVector lo = coef_.begin()->first;
  for (const auto& [alpha, w] : coef_)
    for (int i = 0; i < dim_; ++i) lo[i] = std::min(lo[i], alpha[i]);
  return lo;
}

IndexVector Mask::max_corner() const {
  if (coef_.empty()) throw std::logic_error("mask: empty support");
  IndexVector hi = coef_.begin()->first;
  for (const auto& [alpha, w] : coef_)
    for (int i = 0; i < dim_; ++i) hi[i] = std::max(hi[i], alpha[i]);
  return hi;
}

Mask Mask::shifted(const IndexVector& by) const {
  if (static_cast<int>(by.size()) != dim_)
    throw std::invalid_argument("mask: shift dimension mismatch");
  Mask r(dim_);
  for (const auto& [alpha, w] : coef_) {
    IndexVector idx = alpha;
    for (int i = 0; i < dim_; ++i) idx[i] += by[i];
    r.coef_.emplace(std::move(idx), w);
  }
  return r;
}

Mask Mask::anchored() const {
  if (coef_.empty()) return *this;
  IndexVector lo = min_corner();
  for (int& x : lo) x = -x;
  return shifted(lo);
}

Mask Mask::scaled(const Dyadic& c) const {
  Mask r(dim_);
  if (c.is_zero()) return r;
  for (const auto& [alpha, w] : coef_) r.coef_.emplace(alpha, w * c);
  return r;
}

Mask Mask::upsampled(int factor) const {
  if (factor < 1) throw std::invalid_argument("mask: upsampling factor must be >= 1");
  Mask r(dim_);
  for (const auto& [alpha, w] : coef_) {
    IndexVector idx = alpha;
    for (int i = 0; i < dim_; ++i) idx[i] *= factor;
    r.coef_.emplace(std::move(idx), w);
  }
  return r;
}

Mask add(const Mask& a, const Mask& b) {
  check_same_dim(a.dim(), b.dim(), "mask add");
  Mask r = a;
  for (const auto& [alpha, w] : b.coefficients()) r.add_to(alpha, w);
  return r;
}

Mask subtract(const Mask& a, const Mask& b) {
  check_same_dim(a.dim(), b.dim(), "mask subtract");
  Mask r = a;
  for (const auto& [alpha, w] : b.coefficients()) r.add_to(alpha, -w);
  return r;
}

Mask smoothing_factor(const Direction& v, int dim) {
  check_same_dim(v.dim(), dim, "smoothing factor");
  Mask m(dim);
  const Dyadic half = Dyadic(1).halved();
  m.set(IndexVector(dim, 0), half);
  m.add_to(v.vec(), half);
  return m;
}

Mask directional_product(const DirectionMultiset& D, int dim) {
  Mask m = Mask::delta(dim);
  for (const auto& v : D.directions()) m = product(m, smoothing_factor(v, dim));
  return m;
}

Mask full_smoothing_factor(const Basis& V) {
  Mask m = Mask::delta(V.dim());
  for (const auto& v : V.directions()) m = product(m, smoothing_factor(v, V.dim()));
  return m;
}

Mask bspline_mask(int m) {
  if (m < 0) throw std::invalid_argument("bspline mask: m must be nonnegative");
  Mask binom(1);
  binom.set({0}, Dyadic(1));
  binom.set({1}, Dyadic(1));
  Mask r = binom;
  for (int i = 0; i < m; ++i) r = product(r, binom);
  return r.scaled(Dyadic(BigInt(1), m));
}

Mask box3_mask(int m) {
  if (m < 0) throw std::invalid_argument("box3 mask: m must be nonnegative");
  Mask t(2);
  t.set({0, 0}, Dyadic(1));
  t.set({1, 0}, Dyadic(1));
  t = product(t, [] {
    Mask u(2);
    u.set({0, 0}, Dyadic(1));
    u.set({0, 1}, Dyadic(1));
    return u;
  }());
  t = product(t, [] {
    Mask u(2);
    u.set({0, 0}, Dyadic(1));
    u.set({1, 1}, Dyadic(1));
    return u;
  }());
  Mask r = t;
  for (int i = 0; i < m; ++i) r = product(r, t);
  return r.scaled(Dyadic(BigInt(1), 3 * m + 1));
}

Mask product(const Mask& a, const Mask& b) {
  check_same_dim(a.dim(), b.dim(), "mask product");
  Mask r(a.dim());
  for (const auto& [alpha, wa] : a.coefficients()) {
    for (const auto& [beta, wb] : b.coefficients()) {
      IndexVector idx = alpha;
      for (int i = 0; i < a.dim(); ++i) idx[i] += beta[i];
      r.add_to(idx, wa * wb);
    }
  }
  return r;
}

std::optional<Mask> divide_exact(const Mask& a, const Mask& f) {
  check_same_dim(a.dim(), f.dim(), "mask division");
  if (f.empty()) throw std::invalid_argument("mask division: divisor is zero");
  const int d = a.dim();
  if (a.empty()) return Mask(d);

  // Work on anchored copies; Laurent translation is restored at the end.
  const IndexVector ca = a.min_corner();
  const IndexVector cf = f.min_corner();
  const Mask an = a.anchored();
  const Mask fn = f.anchored();

  // Leading term of the divisor in graded-lex order.
  GrlexLess less;
  IndexVector flead;
  Dyadic flead_c;
  for (const auto& [beta, w] : fn.coefficients()) {
    if (flead.empty() || less(flead, beta)) {
      flead = beta;
      flead_c = w;
    }
  }

  std::map<IndexVector, Dyadic, GrlexLess> rem(an.coefficients().begin(),
                                               an.coefficients().end());
  Mask q(d);
  while (!rem.empty()) {
    const auto lead = std::prev(rem.end());
    // If the divisor's leading term does not divide the remainder's leading
    // term, no exact quotient exists: an exact quotient would reproduce the
    // remainder's leading term as lt(q_left) * lt(f).
    IndexVector diff(d);
    for (int i = 0; i < d; ++i) {
      diff[i] = lead->first[i] - flead[i];
      if (diff[i] < 0) return std::nullopt;
    }
    auto qc = Dyadic::divide_exact(lead->second, flead_c);
    if (!qc) return std::nullopt;
    q.add_to(diff, *qc);
    for (const auto& [beta, w] : fn.coefficients()) {
      IndexVector idx = beta;
      for (int i = 0; i < d; ++i) idx[i] += diff[i];
      auto it = rem.find(idx);
      Dyadic nv = (it == rem.end() ? Dyadic(0) : it->second) - *qc * w;
      if (nv.is_zero()) {
        if (it != rem.end()) rem.erase(it);
      } else if (it != rem.end()) {
        it->second = nv;
      } else {
        rem.emplace(std::move(idx), nv);
      }
    }
  }

  IndexVector shift(d);
  for (int i = 0; i < d; ++i) shift[i] = ca[i] - cf[i];
  return q.shifted(shift);
}

std::vector<Dyadic> submask_sums(const Mask& a) {
  const int d = a.dim();
  if (d > 30) throw std::invalid_argument("submask sums: dimension too large");
  std::vector<Dyadic> sums(std::size_t(1) << d, Dyadic(0));
  for (const auto& [alpha, w] : a.coefficients()) {
    std::size_t idx = 0;
    for (int i = 0; i < d; ++i)
      if (((alpha[i] % 2) + 2) % 2 == 1) idx |= std::size_t(1) << i;
    sums[idx] += w;
  }
  return sums;
}

bool is_nonnegative(const Mask& a) {
  for (const auto& [alpha, w] : a.coefficients())
    if (w.sign() < 0) return false;
  return true;
}

bool satisfies_sum_rule(const Mask& a) {
  for (const auto& s : submask_sums(a))
    if (!(s == Dyadic(1))) return false;
  return true;
}

Mask backward_difference(const Mask& f, const Direction& v) {
  check_same_dim(f.dim(), v.dim(), "backward difference");
  return subtract(f, f.shifted(v.vec()));
}

namespace {

bool peel_smoothing_factors(const Mask& a, DirectionMultiset& dirs, Dyadic& constant) {
  if (a.size() == 1) {
    const auto& [alpha, c] = *a.coefficients().begin();
    const bool at_origin =
        std::all_of(alpha.begin(), alpha.end(), [](int x) { return x == 0; });
    if (at_origin && c.sign() > 0) {
      constant = c;
      return true;
    }
    return false;
  }
  for (const auto& [alpha, c] : a.coefficients()) {
    if (std::all_of(alpha.begin(), alpha.end(), [](int x) { return x == 0; }))
      continue;
    const auto q = divide_exact(a, smoothing_factor(Direction(alpha), a.dim()));
    if (!q)
      continue;
    if (peel_smoothing_factors(*q, dirs, constant)) {
      dirs.add(Direction(alpha));
      return true;
    }
  }
  return false;
}

} // namespace

std::optional<std::pair<Dyadic, DirectionMultiset>> smoothing_product_decomposition(const Mask& a) {
  if (a.empty())
    return std::nullopt;
  const IndexVector lo = a.min_corner();
  if (!std::all_of(lo.begin(), lo.end(), [](int x) { return x == 0; }))
    return std::nullopt;
  DirectionMultiset dirs;
  Dyadic constant;
  if (!peel_smoothing_factors(a, dirs, constant))
    return std::nullopt;
  return std::make_pair(constant, dirs);
}

} // namespace upsub
