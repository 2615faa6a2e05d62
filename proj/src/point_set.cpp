#include "blobtree/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace blobtree {

namespace {

constexpr double kCoordEps = 1e-12;
constexpr double kDistEps = 1e-12;

// Uniform double in [0, 1) built from the top 53 bits of the engine so the
// stream does not depend on the standard library's distribution internals.
double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void check_axis_distinct(const std::vector<Point>& pts, bool use_x) {
  std::vector<std::pair<double, PointId>> vals;
  vals.reserve(pts.size());
  double lo = 0.0, hi = 0.0;
  for (const Point& p : pts) {
    const double v = use_x ? p.x : p.y;
    if (vals.empty()) {
      lo = hi = v;
    } else {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    vals.emplace_back(v, p.id);
  }
  std::sort(vals.begin(), vals.end());
  const double span = std::max(hi - lo, 1.0);
  for (std::size_t i = 1; i < vals.size(); ++i) {
    if (vals[i].first - vals[i - 1].first <= kCoordEps * span) {
      throw GeneralPositionError(
          std::string("duplicate ") + (use_x ? "x" : "y") +
          "-coordinate between points " + std::to_string(vals[i - 1].second) +
          " and " + std::to_string(vals[i].second));
    }
  }
}

void check_no_collinear(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (orient(pts[i], pts[j], pts[k]) == Orientation::Collinear) {
          throw GeneralPositionError(
              "collinear points " + std::to_string(pts[i].id) + "," +
              std::to_string(pts[j].id) + "," + std::to_string(pts[k].id));
        }
      }
    }
  }
}

void check_distances_distinct(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  std::vector<double> d2;
  d2.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = pts[i].x - pts[j].x;
      const double dy = pts[i].y - pts[j].y;
      d2.push_back(dx * dx + dy * dy);
    }
  }
  std::sort(d2.begin(), d2.end());
  for (std::size_t i = 1; i < d2.size(); ++i) {
    if (d2[i] - d2[i - 1] <= kDistEps * std::max(d2[i], 1e-300)) {
      throw GeneralPositionError("pairwise distances are not distinct");
    }
  }
}

}  // namespace

PointSet PointSet::validated(std::vector<std::pair<double, double>> coords) {
  if (coords.empty()) {
    throw std::invalid_argument("point set must be nonempty");
  }
  std::vector<Point> pts;
  pts.reserve(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const auto [x, y] = coords[i];
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw GeneralPositionError("non-finite coordinate at point " +
                                 std::to_string(i));
    }
    pts.push_back(Point{x, y, static_cast<PointId>(i)});
  }
  check_axis_distinct(pts, true);
  check_axis_distinct(pts, false);
  check_no_collinear(pts);
  check_distances_distinct(pts);
  return PointSet(std::move(pts));
}

PointId PointSet::lowest() const {
  PointId best = 0;
  for (const Point& p : points_) {
    if (p.y < points_[static_cast<std::size_t>(best)].y) best = p.id;
  }
  return best;
}

double PointSet::bbox_diagonal() const {
  double xlo = points_[0].x, xhi = points_[0].x;
  double ylo = points_[0].y, yhi = points_[0].y;
  for (const Point& p : points_) {
    xlo = std::min(xlo, p.x);
    xhi = std::max(xhi, p.x);
    ylo = std::min(ylo, p.y);
    yhi = std::max(yhi, p.y);
  }
  return std::hypot(xhi - xlo, yhi - ylo);
}

std::vector<std::pair<double, double>> jitter_coords(
    std::vector<std::pair<double, double>> coords, double eps,
    std::uint64_t seed) {
  if (coords.empty()) return coords;
  if (eps <= 0.0) {
    double xlo = coords[0].first, xhi = coords[0].first;
    double ylo = coords[0].second, yhi = coords[0].second;
    for (const auto& [x, y] : coords) {
      xlo = std::min(xlo, x);
      xhi = std::max(xhi, x);
      ylo = std::min(ylo, y);
      yhi = std::max(yhi, y);
    }
    const double diag = std::hypot(xhi - xlo, yhi - ylo);
    eps = 1e-7 * (diag > 0.0 ? diag : 1.0);
  }
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (auto& [x, y] : coords) {
    x += (2.0 * unit_double(rng) - 1.0) * eps;
    y += (2.0 * unit_double(rng) - 1.0) * eps;
  }
  return coords;
}

}  // namespace blobtree
