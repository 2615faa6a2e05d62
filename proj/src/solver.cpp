#include "blobtree/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace blobtree {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct OrderItem {
  std::int64_t size;
  std::uint8_t family;  // 0 = edge, 1 = wall, 2 = chord
  std::uint32_t key;
};

}  // namespace

std::size_t SubproblemTables::valid_chord_count() const {
  std::size_t c = 0;
  for (std::uint8_t v : chord_valid) c += v;
  return c;
}

SubproblemTables compute_tables(const PointSet& ps, const RootedMst& t) {
  const std::int32_t n = static_cast<std::int32_t>(ps.size());
  const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  SubproblemTables tb;
  tb.n = n;
  tb.root = t.root;
  tb.edge_cost.assign(static_cast<std::size_t>(n), kInf);
  tb.edge_choice.assign(static_cast<std::size_t>(n), {});
  tb.edge_size = t.subtree_size;
  tb.wall_cost.assign(nn, kInf);
  tb.wall_size.assign(nn, 0);
  tb.wall_exit_count.assign(nn, 0);
  tb.wall_exit_child.assign(nn, -1);
  tb.chord_valid.assign(nn, 0);
  tb.chord_facing.assign(nn, Facing::RightFacing);
  tb.chord_size.assign(nn, 0);
  tb.chord_cost.assign(nn, kInf);
  tb.chord_choice.assign(nn, {});

  const auto dist = [&ps](PointId i, PointId j) {
    return distance(ps[i], ps[j]);
  };

  // Preprocessing: crossing scans per unordered pair feed the wall
  // aggregates (both directions) and the chord classification.
  std::vector<MstEdge> crossing;
  for (PointId p = 0; p < n; ++p) {
    for (PointId q = p + 1; q < n; ++q) {
      crossing.clear();
      const std::size_t pq = tb.pid(p, q);
      const std::size_t qp = tb.pid(q, p);
      for (const MstEdge& e : t.edges) {
        if (e.child == p || e.child == q || e.parent == p || e.parent == q) {
          continue;
        }
        if (!segments_cross_properly(ps[p], ps[q], ps[e.child], ps[e.parent])) {
          continue;
        }
        crossing.push_back(e);
        const std::int64_t sw =
            t.subtree_size[static_cast<std::size_t>(e.child)];
        if (orient(ps[p], ps[q], ps[e.child]) == Orientation::Right) {
          // Entry for p->q, exit for q->p.
          tb.wall_size[pq] += sw;
          ++tb.wall_exit_count[qp];
          tb.wall_exit_child[qp] = e.child;
        } else {
          tb.wall_size[qp] += sw;
          ++tb.wall_exit_count[pq];
          tb.wall_exit_child[pq] = e.child;
        }
      }
      const PointId lo = ps[p].y < ps[q].y ? p : q;
      const PointId hi = lo == p ? q : p;
      const ChordInfo info = classify_chord_info(ps, t, lo, hi, crossing);
      const std::size_t cid = tb.pid(lo, hi);
      tb.chord_valid[cid] = info.valid ? 1 : 0;
      tb.chord_facing[cid] = info.facing;
      tb.chord_size[cid] = info.size;
    }
  }

  // Walls with exactly one crossing exit, bucketed by the exiting child.
  std::vector<std::vector<std::uint32_t>> exit_bucket(
      static_cast<std::size_t>(n));
  for (PointId x = 0; x < n; ++x) {
    for (PointId y = 0; y < n; ++y) {
      if (x == y) continue;
      const std::size_t id = tb.pid(x, y);
      if (tb.wall_exit_count[id] == 1) {
        exit_bucket[static_cast<std::size_t>(tb.wall_exit_child[id])]
            .push_back(static_cast<std::uint32_t>(id));
      }
    }
  }

  // Evaluation order: by subproblem size, then edge < wall < chord.
  std::vector<OrderItem> order;
  order.reserve(static_cast<std::size_t>(n) + nn + nn / 2);
  for (PointId u = 0; u < n; ++u) {
    order.push_back(
        {t.subtree_size[static_cast<std::size_t>(u)], 0,
         static_cast<std::uint32_t>(u)});
  }
  for (PointId x = 0; x < n; ++x) {
    for (PointId y = 0; y < n; ++y) {
      if (x == y) continue;
      const std::size_t id = tb.pid(x, y);
      order.push_back({tb.wall_size[id], 1, static_cast<std::uint32_t>(id)});
    }
  }
  for (PointId a = 0; a < n; ++a) {
    for (PointId b = 0; b < n; ++b) {
      if (a == b) continue;
      const std::size_t id = tb.pid(a, b);
      if (ps[a].y < ps[b].y && tb.chord_valid[id]) {
        order.push_back({tb.chord_size[id], 2, static_cast<std::uint32_t>(id)});
      }
    }
  }
  std::sort(order.begin(), order.end(),
            [](const OrderItem& l, const OrderItem& r) {
              if (l.size != r.size) return l.size < r.size;
              if (l.family != r.family) return l.family < r.family;
              return l.key < r.key;
            });

  const auto parent_dir_in_sector = [&](const FaceRef& face, PointId v) {
    const PointId p = t.parent[static_cast<std::size_t>(v)];
    if (p < 0) return false;
    if (p == face.apex || p == face.x || p == face.y) return false;
    return assign_vertex_edge(ps, face, MstEdge{v, p});
  };

  // Accumulates the vertex-assigned entries of a face into (value, used).
  // Returns false when an entry is not yet admissible.
  const auto add_vertex_entries = [&](const FaceRef& face, double& val,
                                      std::int64_t& used,
                                      std::int64_t limit) {
    PointId verts[3] = {face.apex, face.x, face.digon ? -1 : face.y};
    for (PointId v : verts) {
      if (v < 0) continue;
      if (!face.digon && v == face.apex) continue;
      for (PointId w : t.children[static_cast<std::size_t>(v)]) {
        if (w == face.apex || w == face.x || w == face.y) continue;
        if (!assign_vertex_edge(ps, face, MstEdge{w, v})) continue;
        used += t.subtree_size[static_cast<std::size_t>(w)];
        if (used > limit) return false;
        val += tb.edge_cost[static_cast<std::size_t>(w)];
      }
    }
    return true;
  };

  const auto eval_wall = [&](PointId x, PointId y) {
    const std::size_t id = tb.pid(x, y);
    double sum = 0.0;
    for (const MstEdge& e : t.edges) {
      if (e.child == x || e.child == y || e.parent == x || e.parent == y) {
        continue;
      }
      if (!segments_cross_properly(ps[x], ps[y], ps[e.child], ps[e.parent])) {
        continue;
      }
      if (orient(ps[x], ps[y], ps[e.child]) == Orientation::Right) {
        sum += tb.edge_cost[static_cast<std::size_t>(e.child)];
      }
    }
    tb.wall_cost[id] = sum;
  };

  const auto eval_chord = [&](PointId a, PointId b) {
    const std::size_t cid = tb.pid(a, b);
    const std::int64_t s = tb.chord_size[cid];
    const Facing facing = tb.chord_facing[cid];
    double best = kInf;
    Choice ch;

    // Digon base: the east digon starts a left-facing sweep, the west
    // digon a right-facing one.
    {
      const bool east = facing == Facing::LeftFacing;
      const FaceRef face = digon_face(a, b, east);
      const std::size_t wp = east ? tb.pid(a, b) : tb.pid(b, a);
      if (tb.wall_exit_count[wp] == 0 && !parent_dir_in_sector(face, b) &&
          !parent_dir_in_sector(face, a) && tb.wall_size[wp] <= s) {
        double val = dist(a, b) + tb.wall_cost[wp];
        std::int64_t used = tb.wall_size[wp];
        if (add_vertex_entries(face, val, used, s) && used == s &&
            val < best) {
          best = val;
          ch = Choice{BranchKind::DigonBase, a, b, -1, east};
        }
      }
    }

    // Triangle steps from a smaller chord (a, c) of the same facing.
    for (PointId c = 0; c < n; ++c) {
      if (c == a || c == b) continue;
      const std::size_t ac = tb.pid(a, c);
      if (!(ps[a].y < ps[c].y) || !tb.chord_valid[ac]) continue;
      if (tb.chord_facing[ac] != facing) continue;
      const std::int64_t sac = tb.chord_size[ac];
      if (sac + 1 > s) continue;
      FaceRef face;
      if (facing == Facing::RightFacing) {
        if (orient(ps[a], ps[b], ps[c]) != Orientation::Left) continue;
        face = triangle_face(a, b, c);
      } else {
        if (orient(ps[a], ps[b], ps[c]) != Orientation::Right) continue;
        face = triangle_face(a, c, b);
      }
      const std::size_t wp = tb.pid(face.x, face.y);
      if (tb.wall_exit_count[wp] != 0) continue;
      std::int64_t used = sac + 1 + tb.wall_size[wp];
      if (used > s) continue;
      if (parent_dir_in_sector(face, face.x) ||
          parent_dir_in_sector(face, face.y)) {
        continue;
      }
      double val = tb.chord_cost[ac] + dist(face.x, face.y) + tb.wall_cost[wp];
      if (!(val < best)) continue;  // also discards infinities early
      if (!add_vertex_entries(face, val, used, s)) continue;
      if (val < best) {
        best = val;
        ch = Choice{BranchKind::TriangleStep, a, b, c, false};
      }
    }

    tb.chord_cost[cid] = best;
    tb.chord_choice[cid] = ch;
  };

  const auto eval_edge = [&](PointId u) {
    const std::int64_t su = t.subtree_size[static_cast<std::size_t>(u)];
    const PointId up = t.parent[static_cast<std::size_t>(u)];
    const double own = up < 0 ? 0.0 : dist(u, up);
    double best = own;
    for (PointId v : t.children[static_cast<std::size_t>(u)]) {
      best += tb.edge_cost[static_cast<std::size_t>(v)];
    }
    Choice ch;
    ch.kind = BranchKind::Bare;

    if (u == t.root) {
      // Root blob closed off by the root digon at (r, b).
      for (PointId b = 0; b < n; ++b) {
        if (b == u) continue;
        const std::size_t cid = tb.pid(u, b);
        if (!tb.chord_valid[cid]) continue;
        const std::size_t wp = tb.pid(u, b);
        if (tb.wall_exit_count[wp] != 0) continue;
        const FaceRef face = digon_face(u, b, true);
        if (parent_dir_in_sector(face, b)) continue;
        std::int64_t used = 2 + tb.chord_size[cid] + tb.wall_size[wp];
        if (used > su) continue;
        double val = tb.chord_cost[cid] + dist(u, b) + tb.wall_cost[wp];
        if (!(val < best)) continue;
        if (!add_vertex_entries(face, val, used, su)) continue;
        if (used == su && val < best) {
          best = val;
          ch = Choice{BranchKind::RootDigon, u, b, -1, true};
        }
      }
      tb.edge_cost[static_cast<std::size_t>(u)] = best;
      tb.edge_choice[static_cast<std::size_t>(u)] = ch;
      return;
    }

    const double pdx = ps[up].x - ps[u].x;
    const double pdy = ps[up].y - ps[u].y;

    // Exit digon (a, b): uu' leaves through the digon wall or emanates
    // from one of its vertices. exit_vertex is u itself in the vertex
    // case and -1 when uu' is the crossing exit.
    const auto try_exit_digon = [&](PointId a, PointId b, bool east,
                                    PointId exit_vertex) {
      if (a == t.root) return;
      const std::size_t cid = tb.pid(a, b);
      if (!(ps[a].y < ps[b].y) || !tb.chord_valid[cid]) return;
      const Facing want = east ? Facing::RightFacing : Facing::LeftFacing;
      if (tb.chord_facing[cid] != want) return;
      const std::int64_t sc = tb.chord_size[cid];
      const std::size_t wp = east ? tb.pid(a, b) : tb.pid(b, a);
      std::int64_t used = 2 + sc + tb.wall_size[wp];
      if (used > su) return;
      const FaceRef face = digon_face(a, b, east);
      if (exit_vertex != b && parent_dir_in_sector(face, b)) return;
      if (exit_vertex != a && parent_dir_in_sector(face, a)) return;
      double val = tb.chord_cost[cid] + dist(a, b) + tb.wall_cost[wp] + own;
      if (!(val < best)) return;
      if (!add_vertex_entries(face, val, used, su)) return;
      if (used == su && val < best) {
        best = val;
        ch = Choice{BranchKind::ExitDigon, a, b, -1, east};
      }
    };

    // Exit triangle ccw (a, x, y) with wall x -> y. exit_vertex is u when
    // uu' emanates from x or y, -1 when it crosses the wall.
    const auto try_exit_triangle = [&](PointId a, PointId x, PointId y,
                                       PointId exit_vertex) {
      if (a == t.root || a == x || a == y) return;
      const std::size_t ax = tb.pid(a, x);
      const std::size_t ay = tb.pid(a, y);
      if (!(ps[a].y < ps[x].y) || !(ps[a].y < ps[y].y)) return;
      if (!tb.chord_valid[ax] || tb.chord_facing[ax] != Facing::LeftFacing) {
        return;
      }
      if (!tb.chord_valid[ay] || tb.chord_facing[ay] != Facing::RightFacing) {
        return;
      }
      if (orient(ps[a], ps[x], ps[y]) != Orientation::Left) return;
      const std::size_t wp = tb.pid(x, y);
      std::int64_t used =
          3 + tb.chord_size[ax] + tb.chord_size[ay] + tb.wall_size[wp];
      if (used > su) return;
      const FaceRef face = triangle_face(a, x, y);
      if (exit_vertex != x && parent_dir_in_sector(face, x)) return;
      if (exit_vertex != y && parent_dir_in_sector(face, y)) return;
      double val = tb.chord_cost[ax] + tb.chord_cost[ay] + dist(x, y) +
                   tb.wall_cost[wp] + own;
      if (!(val < best)) return;
      if (!add_vertex_entries(face, val, used, su)) return;
      if (val < best) {
        best = val;
        ch = Choice{BranchKind::ExitTriangle, a, x, y, false};
      }
    };

    // Digon branches, crossing exits first.
    for (std::uint32_t id : exit_bucket[static_cast<std::size_t>(u)]) {
      const PointId x = static_cast<PointId>(id / static_cast<std::uint32_t>(n));
      const PointId y = static_cast<PointId>(id % static_cast<std::uint32_t>(n));
      if (ps[x].y < ps[y].y) {
        try_exit_digon(x, y, true, -1);
      } else {
        try_exit_digon(y, x, false, -1);
      }
    }
    // Vertex exits through a digon sector.
    for (PointId a = 0; a < n; ++a) {
      if (a == u) continue;
      if (ps[a].y < ps[u].y) {
        // u as the non-apex vertex b.
        if (tb.wall_exit_count[tb.pid(a, u)] == 0 &&
            assign_vertex_edge(ps, digon_face(a, u, true), MstEdge{u, up})) {
          try_exit_digon(a, u, true, u);
        }
        if (tb.wall_exit_count[tb.pid(u, a)] == 0 &&
            assign_vertex_edge(ps, digon_face(a, u, false), MstEdge{u, up})) {
          try_exit_digon(a, u, false, u);
        }
      } else {
        // u as the apex; a plays the digon vertex b.
        const PointId b = a;
        if (tb.wall_exit_count[tb.pid(u, b)] == 0 &&
            assign_vertex_edge(ps, digon_face(u, b, true), MstEdge{u, up})) {
          try_exit_digon(u, b, true, u);
        }
        if (tb.wall_exit_count[tb.pid(b, u)] == 0 &&
            assign_vertex_edge(ps, digon_face(u, b, false), MstEdge{u, up})) {
          try_exit_digon(u, b, false, u);
        }
      }
    }

    // Triangle branches: crossing exits from the bucket.
    for (std::uint32_t id : exit_bucket[static_cast<std::size_t>(u)]) {
      const PointId x = static_cast<PointId>(id / static_cast<std::uint32_t>(n));
      const PointId y = static_cast<PointId>(id % static_cast<std::uint32_t>(n));
      for (PointId a = 0; a < n; ++a) {
        try_exit_triangle(a, x, y, -1);
      }
    }
    // Vertex exits: u as the wall start x.
    for (PointId z = 0; z < n; ++z) {
      if (z == u) continue;
      if (orient_dirs(pdx, pdy, ps[z].x - ps[u].x, ps[z].y - ps[u].y) !=
          Orientation::Left) {
        continue;
      }
      if (tb.wall_exit_count[tb.pid(u, z)] != 0) continue;
      for (PointId a = 0; a < n; ++a) {
        if (a == u || a == z) continue;
        if (orient_dirs(ps[u].x - ps[a].x, ps[u].y - ps[a].y, pdx, pdy) !=
            Orientation::Left) {
          continue;
        }
        try_exit_triangle(a, u, z, u);
      }
    }
    // Vertex exits: u as the wall end y.
    for (PointId z = 0; z < n; ++z) {
      if (z == u) continue;
      if (orient_dirs(pdx, pdy, ps[z].x - ps[u].x, ps[z].y - ps[u].y) !=
          Orientation::Right) {
        continue;
      }
      if (tb.wall_exit_count[tb.pid(z, u)] != 0) continue;
      for (PointId a = 0; a < n; ++a) {
        if (a == u || a == z) continue;
        if (orient_dirs(ps[u].x - ps[a].x, ps[u].y - ps[a].y, pdx, pdy) !=
            Orientation::Right) {
          continue;
        }
        try_exit_triangle(a, z, u, u);
      }
    }

    tb.edge_cost[static_cast<std::size_t>(u)] = best;
    tb.edge_choice[static_cast<std::size_t>(u)] = ch;
  };

  for (const OrderItem& item : order) {
    switch (item.family) {
      case 0:
        eval_edge(static_cast<PointId>(item.key));
        break;
      case 1:
        eval_wall(static_cast<PointId>(item.key / static_cast<std::uint32_t>(n)),
                  static_cast<PointId>(item.key % static_cast<std::uint32_t>(n)));
        break;
      default:
        eval_chord(static_cast<PointId>(item.key / static_cast<std::uint32_t>(n)),
                   static_cast<PointId>(item.key % static_cast<std::uint32_t>(n)));
        break;
    }
  }
  return tb;
}

namespace {

// Hull chain of the backward side of a chord, in ccw order.
void chord_chain(const SubproblemTables& tb, const PointSet& ps,
                 const RootedMst& t, PointId a, PointId b,
                 std::vector<PointId>& out, std::vector<FaceRef>& faces) {
  const std::size_t cid = tb.pid(a, b);
  const Choice& ch = tb.chord_choice[cid];
  const Facing facing = tb.chord_facing[cid];
  if (ch.kind == BranchKind::DigonBase) {
    faces.push_back(digon_face(a, b, ch.east));
    out.push_back(b);
    return;
  }
  if (ch.kind != BranchKind::TriangleStep) {
    throw std::logic_error("reconstruct: dangling chord choice");
  }
  if (facing == Facing::RightFacing) {
    faces.push_back(triangle_face(a, b, ch.y));
    out.push_back(b);
    chord_chain(tb, ps, t, a, ch.y, out, faces);
  } else {
    chord_chain(tb, ps, t, a, ch.y, out, faces);
    faces.push_back(triangle_face(a, ch.y, b));
    out.push_back(b);
  }
}

}  // namespace

BlobTreeSolution reconstruct(const SubproblemTables& tb, const PointSet& ps,
                             const RootedMst& t) {
  BlobTreeSolution sol;
  std::vector<bool> visited(ps.size(), false);
  std::vector<PointId> stack{t.root};
  while (!stack.empty()) {
    const PointId u = stack.back();
    stack.pop_back();
    if (visited[static_cast<std::size_t>(u)]) {
      throw std::logic_error("reconstruct: subproblem visited twice");
    }
    visited[static_cast<std::size_t>(u)] = true;
    const Choice& ch = tb.edge_choice[static_cast<std::size_t>(u)];
    if (u != t.root) {
      sol.tree_edges.emplace_back(u, t.parent[static_cast<std::size_t>(u)]);
    }
    if (ch.kind == BranchKind::Bare) {
      for (PointId v : t.children[static_cast<std::size_t>(u)]) {
        stack.push_back(v);
      }
      continue;
    }
    // Assemble the blob hull and gather its faces.
    std::vector<PointId> hull{ch.apex};
    std::vector<FaceRef> faces;
    switch (ch.kind) {
      case BranchKind::ExitTriangle:
        chord_chain(tb, ps, t, ch.apex, ch.x, hull, faces);
        faces.push_back(triangle_face(ch.apex, ch.x, ch.y));
        chord_chain(tb, ps, t, ch.apex, ch.y, hull, faces);
        break;
      case BranchKind::ExitDigon:
      case BranchKind::RootDigon:
        faces.push_back(digon_face(ch.apex, ch.x, ch.east));
        chord_chain(tb, ps, t, ch.apex, ch.x, hull, faces);
        break;
      default:
        throw std::logic_error("reconstruct: dangling edge choice");
    }
    // The right-facing chain lists vertices from the chord endpoint
    // westward, which is already ccw after the apex; left-facing chains
    // were emitted in ccw order by chord_chain.
    Polygon blob;
    blob.vertices = hull;
    sol.blobs.push_back(std::move(blob));
    for (const FaceRef& f : faces) {
      const FaceEvents ev = face_events(ps, t, f);
      for (const MstEdge& e : ev.wall_entries) stack.push_back(e.child);
      for (const MstEdge& e : ev.vertex_entries) stack.push_back(e.child);
    }
  }
  sol.cost = tb.edge_cost[static_cast<std::size_t>(t.root)];
  return sol;
}

double solution_cost(const PointSet& ps, const BlobTreeSolution& sol) {
  double c = 0.0;
  for (const Polygon& blob : sol.blobs) c += perimeter(blob, ps.points());
  for (const auto& [i, j] : sol.tree_edges) c += distance(ps[i], ps[j]);
  return c;
}

SolveResult solve(const PointSet& ps) {
  const RootedMst t = build_mst(ps);
  const SubproblemTables tb = compute_tables(ps, t);
  SolveResult res;
  res.solution = reconstruct(tb, ps, t);
  res.cost = tb.edge_cost[static_cast<std::size_t>(t.root)];
  res.edge_problems = ps.size();
  res.wall_problems = ps.size() * (ps.size() - 1);
  res.chord_problems = tb.valid_chord_count();
  return res;
}

namespace {

bool point_in_convex(const PointSet& ps, const Polygon& poly, const Point& p) {
  const std::size_t k = poly.vertices.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Point& a = ps[poly.vertices[i]];
    const Point& b = ps[poly.vertices[(i + 1) % k]];
    if (orient(a, b, p) == Orientation::Right) return false;
  }
  return true;
}

bool polygons_intersect(const PointSet& ps, const Polygon& p1,
                        const Polygon& p2) {
  const std::size_t k1 = p1.vertices.size();
  const std::size_t k2 = p2.vertices.size();
  for (std::size_t i = 0; i < k1; ++i) {
    for (std::size_t j = 0; j < k2; ++j) {
      if (segments_cross_properly(ps[p1.vertices[i]],
                                  ps[p1.vertices[(i + 1) % k1]],
                                  ps[p2.vertices[j]],
                                  ps[p2.vertices[(j + 1) % k2]])) {
        return true;
      }
    }
  }
  for (PointId v : p1.vertices) {
    if (point_in_convex(ps, p2, ps[v])) return true;
  }
  for (PointId v : p2.vertices) {
    if (point_in_convex(ps, p1, ps[v])) return true;
  }
  return false;
}

}  // namespace

std::vector<Violation> validate_solution(const PointSet& ps,
                                         const BlobTreeSolution& sol) {
  std::vector<Violation> out;
  const std::int64_t n = static_cast<std::int64_t>(ps.size());
  const auto bad_id = [n](PointId v) { return v < 0 || v >= n; };

  for (std::size_t bi = 0; bi < sol.blobs.size(); ++bi) {
    const Polygon& blob = sol.blobs[bi];
    const std::string tag = "blob " + std::to_string(bi);
    if (blob.vertices.size() < 3) {
      out.push_back({tag + ": fewer than 3 vertices"});
      continue;
    }
    bool ids_ok = true;
    for (PointId v : blob.vertices) {
      if (bad_id(v)) {
        out.push_back({tag + ": invalid point id"});
        ids_ok = false;
        break;
      }
    }
    if (!ids_ok) continue;
    std::vector<PointId> sorted = blob.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      out.push_back({tag + ": repeated vertex"});
      continue;
    }
    // Convex and ccw iff the cycle equals the hull of its vertices.
    std::vector<Point> pts;
    for (PointId v : blob.vertices) pts.push_back(ps[v]);
    const Polygon hull = convex_hull(pts);
    bool same = hull.vertices.size() == blob.vertices.size();
    if (same) {
      const auto it = std::find(hull.vertices.begin(), hull.vertices.end(),
                                blob.vertices[0]);
      same = it != hull.vertices.end();
      if (same) {
        const std::size_t off =
            static_cast<std::size_t>(it - hull.vertices.begin());
        for (std::size_t i = 0; i < blob.vertices.size(); ++i) {
          if (hull.vertices[(off + i) % hull.vertices.size()] !=
              blob.vertices[i]) {
            same = false;
            break;
          }
        }
      }
    }
    if (!same) out.push_back({tag + ": not a ccw convex cycle"});
  }

  for (std::size_t i = 0; i < sol.blobs.size(); ++i) {
    for (std::size_t j = i + 1; j < sol.blobs.size(); ++j) {
      if (sol.blobs[i].vertices.size() >= 3 &&
          sol.blobs[j].vertices.size() >= 3 &&
          polygons_intersect(ps, sol.blobs[i], sol.blobs[j])) {
        out.push_back({"blobs " + std::to_string(i) + " and " +
                       std::to_string(j) + " intersect"});
      }
    }
  }

  for (const auto& [a, b] : sol.tree_edges) {
    if (bad_id(a) || bad_id(b) || a == b) {
      out.push_back({"tree-edge with invalid endpoints"});
      return out;
    }
  }

  // Contraction: blobs absorb every point they enclose.
  std::vector<std::int32_t> cluster(static_cast<std::size_t>(n), -1);
  for (std::size_t bi = 0; bi < sol.blobs.size(); ++bi) {
    if (sol.blobs[bi].vertices.size() < 3) continue;
    for (std::int64_t v = 0; v < n; ++v) {
      if (point_in_convex(ps, sol.blobs[bi], ps[static_cast<PointId>(v)])) {
        if (cluster[static_cast<std::size_t>(v)] >= 0) {
          out.push_back({"point " + std::to_string(v) +
                         " enclosed by two blobs"});
        }
        cluster[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(bi);
      }
    }
  }
  std::int32_t next = static_cast<std::int32_t>(sol.blobs.size());
  for (auto& c : cluster) {
    if (c < 0) c = next++;
  }
  std::vector<std::int32_t> uf(static_cast<std::size_t>(next));
  for (std::size_t i = 0; i < uf.size(); ++i) uf[i] = static_cast<std::int32_t>(i);
  const auto find = [&uf](std::int32_t x) {
    while (uf[static_cast<std::size_t>(x)] != x) {
      uf[static_cast<std::size_t>(x)] =
          uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
      x = uf[static_cast<std::size_t>(x)];
    }
    return x;
  };
  std::size_t cluster_count = 0;
  {
    std::vector<bool> seen(uf.size(), false);
    for (std::int32_t c : cluster) seen[static_cast<std::size_t>(c)] = true;
    for (bool b : seen) cluster_count += b;
  }
  std::size_t merges = 0;
  bool self_edge = false;
  for (const auto& [a, b] : sol.tree_edges) {
    const std::int32_t ca = cluster[static_cast<std::size_t>(a)];
    const std::int32_t cb = cluster[static_cast<std::size_t>(b)];
    if (find(ca) == find(cb)) {
      self_edge = true;
    } else {
      uf[static_cast<std::size_t>(find(ca))] = find(cb);
      ++merges;
    }
  }
  if (self_edge || sol.tree_edges.size() != cluster_count - 1 ||
      merges != cluster_count - 1) {
    out.push_back({"contraction of blobs is not a spanning tree"});
  }

  const double recomputed = solution_cost(ps, sol);
  if (!costs_match(sol.cost, recomputed)) {
    out.push_back({"stored cost differs from recomputed cost"});
  }
  return out;
}

}  // namespace blobtree
