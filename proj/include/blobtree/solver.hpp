#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blobtree/chords.hpp"
#include "blobtree/mst.hpp"

namespace blobtree {

/// Cost comparison tolerance (absolute plus relative).
inline constexpr double kCostTol = 1e-9;

inline bool costs_match(double a, double b, double tol = kCostTol) {
  const double scale = std::max({1.0, a < 0 ? -a : a, b < 0 ? -b : b});
  const double diff = a - b;
  return (diff < 0 ? -diff : diff) <= tol * scale;
}

/// A blob-tree: convex blobs (ccw vertex cycles) plus tree-edges.
struct BlobTreeSolution {
  std::vector<Polygon> blobs;
  std::vector<std::pair<PointId, PointId>> tree_edges;
  double cost = 0.0;
};

/// Recomputes the cost of a solution from its geometry.
double solution_cost(const PointSet& ps, const BlobTreeSolution& sol);

enum class BranchKind : std::uint8_t {
  Unset,
  Bare,
  DigonBase,
  TriangleStep,
  ExitDigon,
  ExitTriangle,
  RootDigon
};

/// Reconstruction record for one subproblem.
struct Choice {
  BranchKind kind = BranchKind::Unset;
  PointId apex = -1;
  PointId x = -1;  // exit faces: ccw wall x -> y; digons: x = b
  PointId y = -1;
  bool east = false;  // digon orientation
};

/// Memoized costs and choices of the edge/wall/chord subproblems.
struct SubproblemTables {
  std::int32_t n = 0;
  PointId root = -1;

  std::vector<double> edge_cost;      // by child id; edge_cost[root] = optimum
  std::vector<Choice> edge_choice;
  std::vector<std::int64_t> edge_size;

  // Ordered pairs, index x * n + y.
  std::vector<double> wall_cost;
  std::vector<std::int64_t> wall_size;
  std::vector<std::int32_t> wall_exit_count;
  std::vector<PointId> wall_exit_child;

  // Chords indexed a * n + b with a the lower endpoint.
  std::vector<std::uint8_t> chord_valid;
  std::vector<Facing> chord_facing;
  std::vector<std::int64_t> chord_size;
  std::vector<double> chord_cost;
  std::vector<Choice> chord_choice;

  std::size_t pid(PointId x, PointId y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(y);
  }
  std::size_t valid_chord_count() const;
};

/// Runs the preprocessing and the dynamic program.
SubproblemTables compute_tables(const PointSet& ps, const RootedMst& t);

/// Rebuilds the optimal blob-tree from the recorded choices.
BlobTreeSolution reconstruct(const SubproblemTables& tables,
                             const PointSet& ps, const RootedMst& t);

struct SolveResult {
  BlobTreeSolution solution;
  double cost = 0.0;
  std::size_t edge_problems = 0;
  std::size_t wall_problems = 0;
  std::size_t chord_problems = 0;
};

SolveResult solve(const PointSet& ps);

/// Structural violations of a solution; empty means the solution passes.
struct Violation {
  std::string what;
};

std::vector<Violation> validate_solution(const PointSet& ps,
                                         const BlobTreeSolution& sol);

}  // namespace blobtree
