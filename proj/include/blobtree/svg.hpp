#pragma once

#include <string>

#include "blobtree/mst.hpp"
#include "blobtree/solver.hpp"

namespace blobtree {

/// Renders a solution over its point set: blobs stroked blue, tree-edges
/// green, MST edges not used by the solution black, points as dots.
/// Output is byte-stable for identical inputs.
std::string render_svg(const PointSet& ps, const BlobTreeSolution& sol,
                       const RootedMst& mst);

}  // namespace blobtree
