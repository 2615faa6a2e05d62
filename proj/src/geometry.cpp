#include "blobtree/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace blobtree {

Orientation orient_dirs(double ux, double uy, double vx, double vy) {
  const double det = ux * vy - uy * vx;
  const double scale = std::abs(ux * vy) + std::abs(uy * vx);
  if (std::abs(det) <= kOrientEps * scale) return Orientation::Collinear;
  return det > 0.0 ? Orientation::Left : Orientation::Right;
}

Orientation orient(const Point& p, const Point& q, const Point& r) {
  return orient_dirs(q.x - p.x, q.y - p.y, r.x - p.x, r.y - p.y);
}

bool segments_cross_properly(const Point& a, const Point& b, const Point& c,
                             const Point& d) {
  const Orientation o1 = orient(a, b, c);
  const Orientation o2 = orient(a, b, d);
  const Orientation o3 = orient(c, d, a);
  const Orientation o4 = orient(c, d, b);
  if (o1 == Orientation::Collinear || o2 == Orientation::Collinear ||
      o3 == Orientation::Collinear || o4 == Orientation::Collinear) {
    return false;
  }
  return o1 != o2 && o3 != o4;
}

Side boundary_curve_side(const Point& a, const Point& b, const Point& v) {
  if (!(a.y < b.y)) {
    throw std::invalid_argument("boundary_curve_side: a must lie below b");
  }
  // d is a point on the vertical ray below a.
  const Point d{a.x, a.y - 1.0, -1};
  const Orientation bend = orient(d, a, b);
  const Orientation ov1 = orient(d, a, v);
  const Orientation ov2 = orient(a, b, v);
  if (bend == Orientation::Collinear || ov1 == Orientation::Collinear ||
      ov2 == Orientation::Collinear) {
    throw GeneralPositionError(
        "boundary_curve_side: degenerate configuration for points " +
        std::to_string(a.id) + "," + std::to_string(b.id) + "," +
        std::to_string(v.id));
  }
  const bool right =
      bend == Orientation::Left
          ? (ov1 == Orientation::Right || ov2 == Orientation::Right)
          : (ov1 == Orientation::Right && ov2 == Orientation::Right);
  return right ? Side::Right : Side::Left;
}

Polygon convex_hull(const std::vector<Point>& pts) {
  if (pts.empty()) {
    throw std::invalid_argument("convex_hull: empty input");
  }
  std::vector<Point> sorted = pts;
  std::sort(sorted.begin(), sorted.end(), [](const Point& p, const Point& q) {
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  });
  const std::size_t n = sorted.size();
  if (n <= 2) {
    Polygon poly;
    for (const Point& p : sorted) poly.vertices.push_back(p.id);
    return poly;
  }
  // Andrew monotone chain; strict left turns only (inputs are in general
  // position, so collinear triples do not occur).
  std::vector<Point> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], sorted[i]) !=
                         Orientation::Left) {
      --k;
    }
    hull[k++] = sorted[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], sorted[i]) !=
                             Orientation::Left) {
      --k;
    }
    hull[k++] = sorted[i];
  }
  Polygon poly;
  poly.vertices.reserve(k - 1);
  for (std::size_t i = 0; i + 1 < k; ++i) poly.vertices.push_back(hull[i].id);
  return poly;
}

double distance(const Point& p, const Point& q) {
  return std::hypot(p.x - q.x, p.y - q.y);
}

double perimeter(const Polygon& poly, const std::vector<Point>& pts) {
  const std::size_t k = poly.vertices.size();
  if (k <= 1) return 0.0;
  if (k == 2) {
    return 2.0 * distance(pts[static_cast<std::size_t>(poly.vertices[0])],
                          pts[static_cast<std::size_t>(poly.vertices[1])]);
  }
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const Point& p = pts[static_cast<std::size_t>(poly.vertices[i])];
    const Point& q = pts[static_cast<std::size_t>(poly.vertices[(i + 1) % k])];
    total += distance(p, q);
  }
  return total;
}

}  // namespace blobtree
