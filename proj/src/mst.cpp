#include "blobtree/mst.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace blobtree {

RootedMst build_mst(const PointSet& ps) {
  const std::size_t n = ps.size();
  RootedMst t;
  t.root = ps.lowest();
  t.parent.assign(n, -1);
  t.children.assign(n, {});
  t.subtree_size.assign(n, 1);
  if (n == 1) return t;

  // Prim over the complete graph, starting from the root.
  std::vector<bool> in_tree(n, false);
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  std::vector<PointId> best_from(n, t.root);
  in_tree[static_cast<std::size_t>(t.root)] = true;
  for (std::size_t v = 0; v < n; ++v) {
    if (!in_tree[v]) {
      best[v] = distance(ps[t.root], ps[static_cast<PointId>(v)]);
    }
  }
  std::vector<std::pair<PointId, PointId>> undirected;
  undirected.reserve(n - 1);
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!in_tree[v] && (pick == n || best[v] < best[pick])) pick = v;
    }
    in_tree[pick] = true;
    t.total_weight += best[pick];
    undirected.emplace_back(static_cast<PointId>(pick), best_from[pick]);
    for (std::size_t v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      const double d = distance(ps[static_cast<PointId>(pick)],
                                ps[static_cast<PointId>(v)]);
      if (d < best[v]) {
        best[v] = d;
        best_from[v] = static_cast<PointId>(pick);
      }
    }
  }

  // Orient all edges toward the root.
  std::vector<std::vector<PointId>> adj(n);
  for (const auto& [u, v] : undirected) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<PointId> order;
  order.reserve(n);
  order.push_back(t.root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const PointId u = order[i];
    for (PointId v : adj[static_cast<std::size_t>(u)]) {
      if (v == t.parent[static_cast<std::size_t>(u)]) continue;
      t.parent[static_cast<std::size_t>(v)] = u;
      order.push_back(v);
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    const PointId p = t.parent[v];
    if (p >= 0) t.children[static_cast<std::size_t>(p)].push_back(
        static_cast<PointId>(v));
  }
  for (auto& c : t.children) std::sort(c.begin(), c.end());
  for (std::size_t i = order.size(); i-- > 1;) {
    const PointId u = order[i];
    t.subtree_size[static_cast<std::size_t>(
        t.parent[static_cast<std::size_t>(u)])] +=
        t.subtree_size[static_cast<std::size_t>(u)];
  }
  t.edges.reserve(n - 1);
  for (std::size_t v = 0; v < n; ++v) {
    if (t.parent[v] >= 0) {
      t.edges.push_back(MstEdge{static_cast<PointId>(v), t.parent[v]});
    }
  }
  return t;
}

std::vector<PointId> subtree_points(const RootedMst& t, PointId u) {
  if (u < 0 || static_cast<std::size_t>(u) >= t.parent.size()) {
    throw std::invalid_argument("subtree_points: unknown point id");
  }
  std::vector<PointId> out;
  out.push_back(u);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (PointId v : t.children[static_cast<std::size_t>(out[i])]) {
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<PointId>> forest_components(
    const RootedMst& t,
    const std::vector<std::pair<PointId, PointId>>& removed) {
  const std::size_t n = t.parent.size();
  std::vector<bool> drop_child(n, false);
  for (const auto& [a, b] : removed) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n ||
        static_cast<std::size_t>(b) >= n || !t.is_mst_edge(a, b)) {
      throw std::invalid_argument("forest_components: not an MST edge");
    }
    const PointId child = t.parent[static_cast<std::size_t>(a)] == b ? a : b;
    drop_child[static_cast<std::size_t>(child)] = true;
  }
  std::vector<PointId> uf(n);
  for (std::size_t i = 0; i < n; ++i) uf[i] = static_cast<PointId>(i);
  const auto find = [&uf](PointId x) {
    while (uf[static_cast<std::size_t>(x)] != x) {
      uf[static_cast<std::size_t>(x)] =
          uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
      x = uf[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const MstEdge& e : t.edges) {
    if (drop_child[static_cast<std::size_t>(e.child)]) continue;
    uf[static_cast<std::size_t>(find(e.child))] = find(e.parent);
  }
  std::vector<std::vector<PointId>> by_root(n);
  for (std::size_t v = 0; v < n; ++v) {
    by_root[static_cast<std::size_t>(find(static_cast<PointId>(v)))].push_back(
        static_cast<PointId>(v));
  }
  std::vector<std::vector<PointId>> comps;
  for (auto& c : by_root) {
    if (!c.empty()) comps.push_back(std::move(c));
  }
  return comps;
}

}  // namespace blobtree
