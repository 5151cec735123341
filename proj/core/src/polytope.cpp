#include "upsub/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace upsub {

namespace {

Rational cross(const RatPoint& o, const RatPoint& a, const RatPoint& b) {
  return (a.x[0] - o.x[0]) * (b.x[1] - o.x[1]) - (a.x[1] - o.x[1]) * (b.x[0] - o.x[0]);
}

RatPoint sub(const RatPoint& a, const RatPoint& b) {
  return RatPoint{{a.x[0] - b.x[0], a.x[1] - b.x[1]}};
}

RatPoint addp(const RatPoint& a, const RatPoint& b) {
  RatPoint r;
  r.x.reserve(a.x.size());
  for (std::size_t i = 0; i < a.x.size(); ++i)
    r.x.push_back(a.x[i] + b.x[i]);
  return r;
}

/// Andrew's monotone chain on sorted deduplicated points. Pops on cross <= 0,
/// so collinear interior points never survive. Output is counter-clockwise
/// starting at the lexicographic minimum.
std::vector<RatPoint> hull2(std::vector<RatPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n <= 2)
    return pts;

  std::vector<RatPoint> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0)
      --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0)
      --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

/// 0 for polar angle in [0, pi), 1 for [pi, 2 pi).
int half_plane(const RatPoint& u) {
  if (u.x[1] != 0)
    return u.x[1] > 0 ? 0 : 1;
  return u.x[0] > 0 ? 0 : 1;
}

/// -1: u strictly before v in polar angle from 0; 0: same direction; 1: after.
int angle_compare(const RatPoint& u, const RatPoint& v) {
  const int hu = half_plane(u), hv = half_plane(v);
  if (hu != hv)
    return hu < hv ? -1 : 1;
  const Rational c = u.x[0] * v.x[1] - u.x[1] * v.x[0];
  if (c > 0)
    return -1;
  if (c < 0)
    return 1;
  return 0;
}

/// Rotate the CCW vertex list to start at the lowest vertex (ties broken by
/// smaller x), so edge angles increase through [0, 2 pi) during the merge.
std::vector<RatPoint> start_at_bottom(const std::vector<RatPoint>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i].x[1] < v[best].x[1] ||
        (v[i].x[1] == v[best].x[1] && v[i].x[0] < v[best].x[0]))
      best = i;
  }
  std::vector<RatPoint> out;
  out.reserve(v.size());
  out.insert(out.end(), v.begin() + std::ptrdiff_t(best), v.end());
  out.insert(out.end(), v.begin(), v.begin() + std::ptrdiff_t(best));
  return out;
}

Rational dot(const RatPoint& a, const RatPoint& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.x.size(); ++i)
    s += a.x[i] * b.x[i];
  return s;
}

Rational point_dist_sq(const RatPoint& a, const RatPoint& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.x.size(); ++i) {
    const Rational d = a.x[i] - b.x[i];
    s += d * d;
  }
  return s;
}

Rational point_segment_dist_sq(const RatPoint& v, const RatPoint& p, const RatPoint& q) {
  const RatPoint w = sub(q, p);
  const Rational ww = dot(w, w);
  if (ww == 0)
    return point_dist_sq(v, p);
  Rational t = dot(sub(v, p), w) / ww;
  if (t < 0)
    t = 0;
  else if (t > 1)
    t = 1;
  const RatPoint c{{p.x[0] + t * w.x[0], p.x[1] + t * w.x[1]}};
  return point_dist_sq(v, c);
}

Rational point_to_polytope_sq(const RatPoint& v, const ConvexPolytope& b) {
  if (b.contains(v))
    return Rational(0);
  const auto& w = b.vertices();
  if (b.dim() == 1) {
    const Rational& x = v.x[0];
    const Rational& lo = w.front().x[0];
    const Rational& hi = w.back().x[0];
    const Rational d = x < lo ? lo - x : x - hi;
    return d * d;
  }
  if (w.size() == 1)
    return point_dist_sq(v, w[0]);
  Rational best = point_segment_dist_sq(v, w[0], w[1]);
  for (std::size_t i = 1; i < w.size(); ++i) {
    const Rational d = point_segment_dist_sq(v, w[i], w[(i + 1) % w.size()]);
    if (d < best)
      best = d;
  }
  return best;
}

} // namespace

ConvexPolytope ConvexPolytope::interval(const Rational& lo, const Rational& hi) {
  if (lo > hi)
    throw std::invalid_argument("ConvexPolytope::interval: lo > hi");
  std::vector<RatPoint> v{RatPoint{{lo}}};
  if (hi != lo)
    v.push_back(RatPoint{{hi}});
  return ConvexPolytope(1, std::move(v));
}

ConvexPolytope ConvexPolytope::from_points(int dim, std::vector<RatPoint> pts) {
  if (dim != 1 && dim != 2)
    throw std::invalid_argument("ConvexPolytope: only dimensions 1 and 2 are supported");
  if (pts.empty())
    throw std::invalid_argument("ConvexPolytope::from_points: no points");
  for (const auto& p : pts)
    if (p.dim() != dim)
      throw std::invalid_argument("ConvexPolytope::from_points: point dimension mismatch");

  if (dim == 1) {
    Rational lo = pts.front().x[0], hi = lo;
    for (const auto& p : pts) {
      lo = std::min(lo, p.x[0]);
      hi = std::max(hi, p.x[0]);
    }
    return interval(lo, hi);
  }
  return ConvexPolytope(2, hull2(std::move(pts)));
}

bool ConvexPolytope::contains(const RatPoint& p) const {
  if (p.dim() != dim_)
    throw std::invalid_argument("ConvexPolytope::contains: dimension mismatch");
  if (dim_ == 1)
    return verts_.front().x[0] <= p.x[0] && p.x[0] <= verts_.back().x[0];

  if (verts_.size() == 1)
    return p == verts_[0];
  if (verts_.size() == 2) {
    if (cross(verts_[0], verts_[1], p) != 0)
      return false;
    const RatPoint w = sub(verts_[1], verts_[0]);
    const Rational t = dot(sub(p, verts_[0]), w);
    return t >= 0 && t <= dot(w, w);
  }
  for (std::size_t i = 0; i < verts_.size(); ++i)
    if (cross(verts_[i], verts_[(i + 1) % verts_.size()], p) < 0)
      return false;
  return true;
}

ConvexPolytope minkowski_sum(const ConvexPolytope& a, const ConvexPolytope& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("minkowski_sum: dimension mismatch");
  if (a.dim() == 1)
    return ConvexPolytope::interval(a.vertices().front().x[0] + b.vertices().front().x[0],
                                    a.vertices().back().x[0] + b.vertices().back().x[0]);

  const auto& va = a.vertices();
  const auto& vb = b.vertices();
  if (va.size() < 3 || vb.size() < 3) {
    std::vector<RatPoint> sums;
    sums.reserve(va.size() * vb.size());
    for (const auto& p : va)
      for (const auto& q : vb)
        sums.push_back(addp(p, q));
    return ConvexPolytope::from_points(2, std::move(sums));
  }

  const std::vector<RatPoint> A = start_at_bottom(va);
  const std::vector<RatPoint> B = start_at_bottom(vb);
  const std::size_t n = A.size(), m = B.size();
  std::size_t i = 0, j = 0;
  std::vector<RatPoint> out;
  out.reserve(n + m);
  while (i < n || j < m) {
    out.push_back(addp(A[i % n], B[j % m]));
    if (i >= n) {
      ++j;
    } else if (j >= m) {
      ++i;
    } else {
      const int c = angle_compare(sub(A[(i + 1) % n], A[i]), sub(B[(j + 1) % m], B[j]));
      if (c <= 0)
        ++i;
      if (c >= 0)
        ++j;
    }
  }
  return ConvexPolytope::from_points(2, std::move(out));
}

ConvexPolytope scale(const ConvexPolytope& p, const Rational& lambda) {
  if (lambda < 0)
    throw std::invalid_argument("scale: negative factor");
  std::vector<RatPoint> pts = p.vertices();
  for (auto& v : pts)
    for (auto& c : v.x)
      c *= lambda;
  return ConvexPolytope::from_points(p.dim(), std::move(pts));
}

Rational directed_hausdorff_sq(const ConvexPolytope& a, const ConvexPolytope& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("directed_hausdorff_sq: dimension mismatch");
  Rational best = 0;
  for (const auto& v : a.vertices())
    best = std::max(best, point_to_polytope_sq(v, b));
  return best;
}

Rational hausdorff_sq(const ConvexPolytope& a, const ConvexPolytope& b) {
  return std::max(directed_hausdorff_sq(a, b), directed_hausdorff_sq(b, a));
}

double hausdorff(const ConvexPolytope& a, const ConvexPolytope& b) {
  return std::sqrt(to_double(hausdorff_sq(a, b)));
}

} // namespace upsub
