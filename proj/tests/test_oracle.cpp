#include <doctest.h>

#include <cmath>

#include "blobtree/oracle.hpp"
#include "test_support.hpp"

using namespace blobtree;

TEST_CASE("oracles on the smallest instances") {
  const PointSet one = PointSet::validated({{0.3, 0.7}});
  CHECK(mst_subset_oracle(one).cost == 0.0);
  CHECK(partition_oracle(one).cost == 0.0);

  const PointSet two = PointSet::validated({{0, 0}, {3, 4.01}});
  CHECK(partition_oracle(two).cost ==
        doctest::Approx(distance(two[0], two[1])));
  CHECK(partition_oracle(two).solution.tree_edges.size() == 1);

  const PointSet tri = PointSet::validated({{0, 0}, {4, 0.01}, {0.02, 3}});
  const RootedMst t = build_mst(tri);
  CHECK(mst_subset_oracle(tri).cost == doctest::Approx(t.total_weight));
  CHECK(partition_oracle(tri).cost == doctest::Approx(t.total_weight));
}

TEST_CASE("oracle guards") {
  const PointSet big = testsup::random_points(23, 5);
  CHECK_THROWS_AS(mst_subset_oracle(big), std::invalid_argument);
  const PointSet med = testsup::random_points(11, 6);
  CHECK_THROWS_AS(partition_oracle(med), std::invalid_argument);
}

TEST_CASE("hand-enumerable square plus far point") {
  // Four corners of a small square and one distant point: the optimum is
  // the minimum of the hand-enumerated candidates.
  const double s = 0.1;
  const PointSet ps = PointSet::validated({{0.0, 0.0},
                                           {s, 0.0011},
                                           {s * 1.002, s},
                                           {-0.0012, s * 1.004},
                                           {5.0, 0.031}});
  const OracleResult res = partition_oracle(ps);
  // Candidate A: all singletons, connected by the MST.
  const RootedMst t = build_mst(ps);
  // Candidate B: square block as a blob plus one link to the far point.
  std::vector<Point> sq{ps[0], ps[1], ps[2], ps[3]};
  double link = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 4; ++i) link = std::min(link, distance(ps[i], ps[4]));
  const double blob_cost = perimeter(convex_hull(sq), ps.points()) + link;
  CHECK(res.cost == doctest::Approx(std::min(t.total_weight, blob_cost)));
  CHECK(res.cost <= t.total_weight + 1e-12);
}

TEST_CASE("cross-oracle agreement on random instances") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 2 + static_cast<int>(seed % 8);  // up to 9
    const PointSet ps = testsup::random_points(n, 9000 + seed);
    const OracleResult a = mst_subset_oracle(ps);
    const OracleResult b = partition_oracle(ps);
    CHECK(costs_match(a.cost, b.cost));
    CHECK(validate_solution(ps, a.solution).empty());
    CHECK(validate_solution(ps, b.solution).empty());
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const PointSet ps =
        blobtree::generate(InstanceKind::Cluster, 9, 130 + seed);
    const OracleResult a = mst_subset_oracle(ps);
    const OracleResult b = partition_oracle(ps);
    CHECK(costs_match(a.cost, b.cost));
  }
}

TEST_CASE("subset oracle never beats nor loses to the MST baseline") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PointSet ps = testsup::random_points(12, 333 + seed);
    const RootedMst t = build_mst(ps);
    const OracleResult res = mst_subset_oracle(ps);
    CHECK(res.cost <= t.total_weight + 1e-12);
    CHECK(res.nodes_examined == (1ULL << (ps.size() - 1)));
  }
}

TEST_CASE("a dense cluster instance forms a blob in the oracle optimum") {
  const PointSet ps = blobtree::generate(InstanceKind::Cluster, 17, 7);
  const OracleResult res = mst_subset_oracle(ps);
  CHECK(res.solution.blobs.size() >= 1);
  CHECK(validate_solution(ps, res.solution).empty());
}
