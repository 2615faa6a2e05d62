#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "blobtree/mst.hpp"
#include "test_support.hpp"

using namespace blobtree;

namespace {

// Kruskal, as an independent second implementation.
double kruskal_weight(const PointSet& ps) {
  const int n = static_cast<int>(ps.size());
  std::vector<std::tuple<double, int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      edges.emplace_back(distance(ps[i], ps[j]), i, j);
    }
  }
  std::sort(edges.begin(), edges.end());
  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  const auto find = [&uf](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  double total = 0.0;
  for (const auto& [w, i, j] : edges) {
    if (find(i) != find(j)) {
      uf[find(i)] = find(j);
      total += w;
    }
  }
  return total;
}

// Enumerates all spanning trees of K_n via Pruefer sequences.
double brute_min_spanning_weight(const PointSet& ps) {
  const int n = static_cast<int>(ps.size());
  if (n == 1) return 0.0;
  if (n == 2) return distance(ps[0], ps[1]);
  std::vector<int> seq(n - 2, 0);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    // Decode the Pruefer sequence.
    std::vector<int> deg(n, 1);
    for (int s : seq) ++deg[s];
    double w = 0.0;
    std::vector<int> degc = deg;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v) {
      if (degc[v] == 1) leaves.insert(v);
    }
    for (int s : seq) {
      const int leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      w += distance(ps[leaf], ps[s]);
      if (--degc[s] == 1) leaves.insert(s);
    }
    const int u = *leaves.begin();
    const int v = *std::next(leaves.begin());
    w += distance(ps[u], ps[v]);
    best = std::min(best, w);
    // Next sequence.
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  return best;
}

}  // namespace

TEST_CASE("mst of a right triangle drops the hypotenuse") {
  const PointSet ps = PointSet::validated({{0, 0}, {4, 0.01}, {0.02, 3}});
  const RootedMst t = build_mst(ps);
  CHECK(t.root == 0);
  CHECK(t.edges.size() == 2);
  CHECK(t.parent[1] == 0);
  CHECK(t.parent[2] == 0);
  CHECK(t.total_weight == doctest::Approx(7.0).epsilon(0.01));
}

TEST_CASE("mst of two points") {
  const PointSet ps = PointSet::validated({{1, 2}, {0.5, 0.3}});
  const RootedMst t = build_mst(ps);
  CHECK(t.root == 1);
  REQUIRE(t.edges.size() == 1);
  CHECK(t.edges[0].child == 0);
  CHECK(t.edges[0].parent == 1);
  CHECK(t.subtree_size[1] == 2);
}

TEST_CASE("mst weight matches an independent Kruskal") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const PointSet ps = testsup::random_points(100, 900 + seed);
    const RootedMst t = build_mst(ps);
    CHECK(t.total_weight ==
          doctest::Approx(kruskal_weight(ps)).epsilon(1e-12));
  }
}

TEST_CASE("mst weight is minimal over all spanning trees (brute force)") {
  int instances = 0;
  for (std::uint64_t seed = 0; instances < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 7);  // up to 8 points
    const PointSet ps = testsup::random_points(n, 5000 + seed);
    const RootedMst t = build_mst(ps);
    CHECK(t.total_weight ==
          doctest::Approx(brute_min_spanning_weight(ps)).epsilon(1e-12));
    ++instances;
  }
}

TEST_CASE("root is the lowest point and degrees stay within 6") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PointSet ps = testsup::random_points(60, 40 + seed);
    const RootedMst t = build_mst(ps);
    for (const Point& p : ps.points()) {
      if (p.id != t.root) CHECK(ps[t.root].y < p.y);
    }
    std::vector<int> deg(ps.size(), 0);
    for (const MstEdge& e : t.edges) {
      ++deg[e.child];
      ++deg[e.parent];
    }
    for (int d : deg) CHECK(d <= 6);
    // Subtree bookkeeping.
    CHECK(t.subtree_size[t.root] == static_cast<std::int64_t>(ps.size()));
    for (std::size_t u = 0; u < ps.size(); ++u) {
      std::int64_t sum = 1;
      for (PointId v : t.children[u]) sum += t.subtree_size[v];
      CHECK(t.subtree_size[u] == sum);
    }
  }
}

TEST_CASE("subtree_points") {
  const PointSet ps = testsup::random_points(40, 77);
  const RootedMst t = build_mst(ps);
  CHECK(subtree_points(t, t.root).size() == ps.size());
  CHECK_THROWS_AS(subtree_points(t, 1000), std::invalid_argument);
  // Flood-fill oracle avoiding the parent edge.
  for (PointId u = 0; u < static_cast<PointId>(ps.size()); ++u) {
    std::vector<PointId> flood{u};
    std::set<PointId> seen{u};
    for (std::size_t i = 0; i < flood.size(); ++i) {
      const PointId x = flood[i];
      for (const MstEdge& e : t.edges) {
        if (e.child == u && e.parent == t.parent[u]) continue;  // severed
        PointId other = -1;
        if (e.child == x) other = e.parent;
        if (e.parent == x) other = e.child;
        if (other < 0) continue;
        if (seen.insert(other).second) flood.push_back(other);
      }
    }
    std::vector<PointId> expect(seen.begin(), seen.end());
    CHECK(subtree_points(t, u) == expect);
    CHECK(static_cast<std::int64_t>(expect.size()) == t.subtree_size[u]);
  }
}

TEST_CASE("forest_components") {
  const PointSet ps = testsup::random_points(30, 123);
  const RootedMst t = build_mst(ps);
  CHECK(forest_components(t, {}).size() == 1);
  std::vector<std::pair<PointId, PointId>> all;
  for (const MstEdge& e : t.edges) all.emplace_back(e.child, e.parent);
  CHECK(forest_components(t, all).size() == ps.size());
  CHECK_THROWS_AS(forest_components(t, {{0, 0}}), std::invalid_argument);

  std::mt19937_64 rng(5);
  for (int it = 0; it < 20; ++it) {
    std::vector<std::pair<PointId, PointId>> removed;
    std::set<std::size_t> picked;
    while (picked.size() < 3) picked.insert(rng() % t.edges.size());
    for (std::size_t i : picked) {
      removed.emplace_back(t.edges[i].child, t.edges[i].parent);
    }
    const auto comps = forest_components(t, removed);
    CHECK(comps.size() == 4);
    std::size_t total = 0;
    for (const auto& c : comps) total += c.size();
    CHECK(total == ps.size());
  }
}
