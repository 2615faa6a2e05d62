#pragma once

#include <utility>
#include <vector>

#include "blobtree/point_set.hpp"

namespace blobtree {

/// Directed MST edge from a child toward its parent (toward the root).
struct MstEdge {
  PointId child = -1;
  PointId parent = -1;
};

/// Euclidean MST rooted at the lowest point, edges directed toward the
/// root. Immutable after construction.
struct RootedMst {
  PointId root = -1;
  std::vector<PointId> parent;                 // parent[root] == -1
  std::vector<std::vector<PointId>> children;  // ascending ids
  std::vector<MstEdge> edges;                  // n-1 directed edges
  std::vector<std::int64_t> subtree_size;      // |V_u|
  double total_weight = 0.0;

  bool is_mst_edge(PointId u, PointId v) const {
    return (parent[static_cast<std::size_t>(u)] == v) ||
           (parent[static_cast<std::size_t>(v)] == u);
  }
};

/// Dense O(n^2) Prim construction; deterministic for a fixed input.
RootedMst build_mst(const PointSet& ps);

/// The set V_u of points in the subtree rooted at u, ascending ids.
std::vector<PointId> subtree_points(const RootedMst& t, PointId u);

/// Connected components of the MST after removing the given undirected
/// edges. Rejects pairs that are not MST edges. Components are sorted
/// internally and ordered by smallest member.
std::vector<std::vector<PointId>> forest_components(
    const RootedMst& t, const std::vector<std::pair<PointId, PointId>>& removed);

}  // namespace blobtree
