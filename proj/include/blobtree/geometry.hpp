#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace blobtree {

using PointId = std::int32_t;

/// Raised when an input violates the general-position requirements
/// (distinct x/y coordinates, no collinear triple, distinct pairwise
/// distances) or when a predicate hits a degenerate configuration that
/// those requirements should have excluded.
struct GeneralPositionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
  PointId id = -1;
};

enum class Orientation { Left, Right, Collinear };
enum class Side { Left, Right };

/// Relative tolerance applied to orientation determinants.
inline constexpr double kOrientEps = 1e-12;

/// Sign of the cross product u x v with a relative epsilon.
Orientation orient_dirs(double ux, double uy, double vx, double vy);

/// Orientation of r relative to the directed line p -> q.
Orientation orient(const Point& p, const Point& q, const Point& r);

/// True iff the open segments ab and cd share exactly one interior point.
/// Touching at an endpoint does not count.
bool segments_cross_properly(const Point& a, const Point& b, const Point& c,
                             const Point& d);

/// Side of the boundary curve for the pair (a below b): the union of the
/// vertical ray below a and the ray from a through b, walked upward.
/// Precondition: a.y < b.y and v off the curve.
Side boundary_curve_side(const Point& a, const Point& b, const Point& v);

/// Convex polygon stored as point ids in counterclockwise cyclic order.
/// Sizes 1 and 2 are degenerate and only appear inside oracle enumeration.
struct Polygon {
  std::vector<PointId> vertices;
};

/// Counterclockwise convex hull of the given points. Rejects empty input.
Polygon convex_hull(const std::vector<Point>& pts);

double distance(const Point& p, const Point& q);

/// Perimeter with the degenerate conventions: size 1 -> 0,
/// size 2 -> twice the segment length.
double perimeter(const Polygon& poly, const std::vector<Point>& pts);

}  // namespace blobtree
