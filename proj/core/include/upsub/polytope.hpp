#pragma once

#include "upsub/rational.hpp"

#include <compare>
#include <vector>

namespace upsub {

/// Point with exact rational coordinates.
struct RatPoint {
  std::vector<Rational> x;

  int dim() const { return static_cast<int>(x.size()); }

  friend bool operator==(const RatPoint&, const RatPoint&) = default;
  friend auto operator<=>(const RatPoint& a, const RatPoint& b) {
    return a.x <=> b.x;
  }
};

/// Compact convex polytope in dimension 1 or 2, stored in canonical form:
/// in 1d the endpoints lo <= hi (one vertex when equal), in 2d the hull
/// vertices counter-clockwise starting at the lexicographically smallest,
/// with no collinear triples. Degenerate cases (a point, a segment) keep one
/// or two vertices. Canonical form makes operator== a set equality test.
class ConvexPolytope {
public:
  static ConvexPolytope interval(const Rational& lo, const Rational& hi);
  /// Convex hull of a nonempty point set.
  static ConvexPolytope from_points(int dim, std::vector<RatPoint> pts);

  int dim() const { return dim_; }
  const std::vector<RatPoint>& vertices() const { return verts_; }

  bool contains(const RatPoint& p) const;

  friend bool operator==(const ConvexPolytope&, const ConvexPolytope&) = default;

private:
  ConvexPolytope(int dim, std::vector<RatPoint> verts)
      : dim_(dim), verts_(std::move(verts)) {}

  int dim_;
  std::vector<RatPoint> verts_;
};

ConvexPolytope minkowski_sum(const ConvexPolytope& a, const ConvexPolytope& b);

/// lambda * P for lambda >= 0.
ConvexPolytope scale(const ConvexPolytope& p, const Rational& lambda);

/// sup_{a in A} dist(a, B)^2, exact. For convex sets the supremum is attained
/// at a vertex of A, so this is a finite max of point-to-polytope distances.
Rational directed_hausdorff_sq(const ConvexPolytope& a, const ConvexPolytope& b);
Rational hausdorff_sq(const ConvexPolytope& a, const ConvexPolytope& b);
double hausdorff(const ConvexPolytope& a, const ConvexPolytope& b);

} // namespace upsub
