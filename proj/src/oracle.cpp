#include "blobtree/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "blobtree/mst.hpp"

namespace blobtree {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double component_perimeter(const PointSet& ps,
                           const std::vector<PointId>& members) {
  if (members.size() <= 1) return 0.0;
  if (members.size() == 2) {
    return 2.0 * distance(ps[members[0]], ps[members[1]]);
  }
  std::vector<Point> pts;
  pts.reserve(members.size());
  for (PointId v : members) pts.push_back(ps[v]);
  return perimeter(convex_hull(pts), ps.points());
}

}  // namespace

OracleResult mst_subset_oracle(const PointSet& ps) {
  const std::size_t n = ps.size();
  if (n > 22) {
    throw std::invalid_argument("mst_subset_oracle: n exceeds the guard (22)");
  }
  const RootedMst t = build_mst(ps);
  const std::size_t m = n - (n > 0 ? 1 : 0);
  std::vector<double> len(m);
  for (std::size_t i = 0; i < m; ++i) {
    len[i] = distance(ps[t.edges[i].child], ps[t.edges[i].parent]);
  }

  OracleResult res;
  double best = kInf;
  std::uint64_t best_mask = 0;
  std::vector<PointId> uf(n);
  std::vector<std::vector<PointId>> comps(n);
  const auto find = [&uf](PointId x) {
    while (uf[static_cast<std::size_t>(x)] != x) {
      uf[static_cast<std::size_t>(x)] =
          uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
      x = uf[static_cast<std::size_t>(x)];
    }
    return x;
  };

  const std::uint64_t total = 1ULL << m;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t v = 0; v < n; ++v) uf[v] = static_cast<PointId>(v);
    double cost = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (1ULL << i)) {
        uf[static_cast<std::size_t>(find(t.edges[i].child))] =
            find(t.edges[i].parent);
      } else {
        cost += len[i];
      }
    }
    for (auto& c : comps) c.clear();
    for (std::size_t v = 0; v < n; ++v) {
      comps[static_cast<std::size_t>(find(static_cast<PointId>(v)))].push_back(
          static_cast<PointId>(v));
    }
    for (const auto& c : comps) {
      if (c.size() >= 2) cost += component_perimeter(ps, c);
    }
    if (cost < best) {
      best = cost;
      best_mask = mask;
    }
  }
  res.nodes_examined = total;

  // Rebuild the winning labeling, re-expressing size-2 blue components
  // as tree-edges (they are dominated and never appear in a minimum).
  for (std::size_t v = 0; v < n; ++v) uf[v] = static_cast<PointId>(v);
  for (std::size_t i = 0; i < m; ++i) {
    if (best_mask & (1ULL << i)) {
      uf[static_cast<std::size_t>(find(t.edges[i].child))] =
          find(t.edges[i].parent);
    } else {
      res.solution.tree_edges.emplace_back(t.edges[i].child,
                                           t.edges[i].parent);
    }
  }
  for (auto& c : comps) c.clear();
  for (std::size_t v = 0; v < n; ++v) {
    comps[static_cast<std::size_t>(find(static_cast<PointId>(v)))].push_back(
        static_cast<PointId>(v));
  }
  for (const auto& c : comps) {
    if (c.size() == 2) {
      res.solution.tree_edges.emplace_back(c[0], c[1]);
    } else if (c.size() >= 3) {
      std::vector<Point> pts;
      for (PointId v : c) pts.push_back(ps[v]);
      res.solution.blobs.push_back(convex_hull(pts));
    }
  }
  res.cost = solution_cost(ps, res.solution);
  res.solution.cost = res.cost;
  return res;
}

OracleResult partition_oracle(const PointSet& ps) {
  const std::size_t n = ps.size();
  if (n > 10) {
    throw std::invalid_argument("partition_oracle: n exceeds the guard (10)");
  }
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      d[i][j] = distance(ps[static_cast<PointId>(i)],
                         ps[static_cast<PointId>(j)]);
    }
  }

  OracleResult res;
  double best = kInf;
  std::vector<int> best_rgs;

  // Evaluates one partition given as a restricted growth string.
  std::vector<int> rgs(n, 0);
  const auto eval = [&](const std::vector<int>& assign) -> double {
    int nblocks = 0;
    for (int b : assign) nblocks = std::max(nblocks, b + 1);
    std::vector<std::vector<PointId>> blocks(
        static_cast<std::size_t>(nblocks));
    for (std::size_t i = 0; i < n; ++i) {
      blocks[static_cast<std::size_t>(assign[i])].push_back(
          static_cast<PointId>(i));
    }
    // Clusters: one per block of size >= 3, singletons otherwise.
    std::vector<std::vector<PointId>> clusters;
    double cost = 0.0;
    for (const auto& blk : blocks) {
      if (blk.size() >= 3) {
        cost += component_perimeter(ps, blk);
        clusters.push_back(blk);
      } else {
        for (PointId v : blk) clusters.push_back({v});
      }
    }
    const std::size_t k = clusters.size();
    if (k > 1) {
      // Prim over clusters with closest-pair weights.
      std::vector<bool> in(k, false);
      std::vector<double> bestw(k, kInf);
      in[0] = true;
      for (std::size_t c = 1; c < k; ++c) {
        double w = kInf;
        for (PointId u : clusters[0]) {
          for (PointId v : clusters[c]) {
            w = std::min(w, d[static_cast<std::size_t>(u)]
                                [static_cast<std::size_t>(v)]);
          }
        }
        bestw[c] = w;
      }
      for (std::size_t step = 1; step < k; ++step) {
        std::size_t pick = k;
        for (std::size_t c = 0; c < k; ++c) {
          if (!in[c] && (pick == k || bestw[c] < bestw[pick])) pick = c;
        }
        in[pick] = true;
        cost += bestw[pick];
        for (std::size_t c = 0; c < k; ++c) {
          if (in[c]) continue;
          double w = kInf;
          for (PointId u : clusters[pick]) {
            for (PointId v : clusters[c]) {
              w = std::min(w, d[static_cast<std::size_t>(u)]
                                  [static_cast<std::size_t>(v)]);
            }
          }
          bestw[c] = std::min(bestw[c], w);
        }
      }
    }
    return cost;
  };

  // Enumerate restricted growth strings.
  std::uint64_t count = 0;
  const auto recurse = [&](auto&& self, std::size_t i, int maxb) -> void {
    if (i == n) {
      ++count;
      const double cost = eval(rgs);
      if (cost < best) {
        best = cost;
        best_rgs = rgs;
      }
      return;
    }
    for (int b = 0; b <= maxb + 1; ++b) {
      rgs[i] = b;
      self(self, i + 1, std::max(maxb, b));
    }
  };
  recurse(recurse, 0, -1);
  res.nodes_examined = count;

  // Rebuild the winning partition including the realizing tree-edges.
  {
    int nblocks = 0;
    for (int b : best_rgs) nblocks = std::max(nblocks, b + 1);
    std::vector<std::vector<PointId>> blocks(
        static_cast<std::size_t>(nblocks));
    for (std::size_t i = 0; i < n; ++i) {
      blocks[static_cast<std::size_t>(best_rgs[i])].push_back(
          static_cast<PointId>(i));
    }
    std::vector<std::vector<PointId>> clusters;
    for (const auto& blk : blocks) {
      if (blk.size() >= 3) {
        std::vector<Point> pts;
        for (PointId v : blk) pts.push_back(ps[v]);
        res.solution.blobs.push_back(convex_hull(pts));
        clusters.push_back(blk);
      } else {
        for (PointId v : blk) clusters.push_back({v});
      }
    }
    const std::size_t k = clusters.size();
    if (k > 1) {
      std::vector<bool> in(k, false);
      std::vector<double> bestw(k, kInf);
      std::vector<std::pair<PointId, PointId>> bestpair(k, {-1, -1});
      in[0] = true;
      const auto relax = [&](std::size_t from, std::size_t c) {
        for (PointId u : clusters[from]) {
          for (PointId v : clusters[c]) {
            const double w =
                d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            if (w < bestw[c]) {
              bestw[c] = w;
              bestpair[c] = {u, v};
            }
          }
        }
      };
      for (std::size_t c = 1; c < k; ++c) relax(0, c);
      for (std::size_t step = 1; step < k; ++step) {
        std::size_t pick = k;
        for (std::size_t c = 0; c < k; ++c) {
          if (!in[c] && (pick == k || bestw[c] < bestw[pick])) pick = c;
        }
        in[pick] = true;
        res.solution.tree_edges.push_back(bestpair[pick]);
        for (std::size_t c = 0; c < k; ++c) {
          if (!in[c]) relax(pick, c);
        }
      }
    }
  }
  res.cost = solution_cost(ps, res.solution);
  res.solution.cost = res.cost;
  return res;
}

}  // namespace blobtree
