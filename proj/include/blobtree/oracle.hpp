#pragma once

#include <cstdint>

#include "blobtree/solver.hpp"

namespace blobtree {

struct OracleResult {
  double cost = 0.0;
  BlobTreeSolution solution;
  std::uint64_t nodes_examined = 0;
};

/// Exhaustive baseline over all 2^(n-1) labelings of MST edges as
/// tree-edge vs in-blob. Guarded to n <= 22.
OracleResult mst_subset_oracle(const PointSet& ps);

/// Assumption-free baseline over all set partitions of the points:
/// blocks of size >= 3 become blobs, the contracted clusters are joined
/// by a minimum spanning tree over closest point pairs. Guarded to
/// n <= 10.
OracleResult partition_oracle(const PointSet& ps);

}  // namespace blobtree
