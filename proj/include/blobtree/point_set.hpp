#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "blobtree/geometry.hpp"

namespace blobtree {

/// Immutable planar point set in general position: finite coordinates,
/// pairwise distinct x and y, no collinear triple, distinct pairwise
/// distances. Construction validates and throws GeneralPositionError.
class PointSet {
 public:
  static PointSet validated(std::vector<std::pair<double, double>> coords);

  std::size_t size() const { return points_.size(); }
  const Point& operator[](PointId id) const {
    return points_.at(static_cast<std::size_t>(id));
  }
  const std::vector<Point>& points() const { return points_; }

  /// Lowest point (unique minimum y); used as the MST root.
  PointId lowest() const;

  double bbox_diagonal() const;

 private:
  explicit PointSet(std::vector<Point> pts) : points_(std::move(pts)) {}
  std::vector<Point> points_;
};

/// Perturbs every coordinate by an independent uniform offset in
/// [-eps, eps]. eps <= 0 selects the default 1e-7 times the bounding-box
/// diagonal. Deterministic for a fixed seed.
std::vector<std::pair<double, double>> jitter_coords(
    std::vector<std::pair<double, double>> coords, double eps,
    std::uint64_t seed);

}  // namespace blobtree
