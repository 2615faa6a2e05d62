#include "blobtree/chords.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace blobtree {

namespace {

// Strictly counterclockwise between u and v (exclusive boundaries).
bool ccw_between(double ux, double uy, double dx, double dy, double vx,
                 double vy) {
  return orient_dirs(ux, uy, dx, dy) == Orientation::Left &&
         orient_dirs(dx, dy, vx, vy) == Orientation::Left;
}

bool cw_between(double ux, double uy, double dx, double dy, double vx,
                double vy) {
  return orient_dirs(ux, uy, dx, dy) == Orientation::Right &&
         orient_dirs(dx, dy, vx, vy) == Orientation::Right;
}

struct UnionFind {
  std::vector<PointId> up;
  explicit UnionFind(std::size_t n) : up(n) {
    for (std::size_t i = 0; i < n; ++i) up[i] = static_cast<PointId>(i);
  }
  PointId find(PointId x) {
    while (up[static_cast<std::size_t>(x)] != x) {
      up[static_cast<std::size_t>(x)] =
          up[static_cast<std::size_t>(up[static_cast<std::size_t>(x)])];
      x = up[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(PointId a, PointId b) {
    up[static_cast<std::size_t>(find(a))] = find(b);
  }
};

}  // namespace

CrossingSets crossing_set(const PointSet& ps, const RootedMst& t, PointId a,
                          PointId b) {
  if (a == b) throw std::invalid_argument("crossing_set: a == b");
  CrossingSets out;
  const Point& pa = ps[a];
  const Point& pb = ps[b];
  for (const MstEdge& e : t.edges) {
    if (e.child == a || e.child == b || e.parent == a || e.parent == b) {
      out.incident.push_back(e);
    } else if (segments_cross_properly(pa, pb, ps[e.child], ps[e.parent])) {
      out.crossing.push_back(e);
    }
  }
  return out;
}

EndpointClass classify_endpoint(const PointSet& ps, PointId a, PointId b,
                                PointId v) {
  if (v == a || v == b) {
    throw std::invalid_argument("classify_endpoint: v coincides with a or b");
  }
  return boundary_curve_side(ps[a], ps[b], ps[v]) == Side::Left
             ? EndpointClass::LeftEndpoint
             : EndpointClass::RightEndpoint;
}

namespace {

ChordInfo classify_chord_core(const PointSet& ps, const RootedMst& t,
                              PointId a, PointId b,
                              const std::vector<MstEdge>& crossing,
                              std::vector<PointId>* backward_out) {
  const std::size_t n = ps.size();
  if (!(ps[a].y < ps[b].y)) {
    throw std::invalid_argument("chord requires a below b");
  }
  ChordInfo info;
  // Forest T \ X+_ab.
  std::vector<bool> removed(n, false);  // marks child endpoints of removed edges
  for (const MstEdge& e : crossing) {
    removed[static_cast<std::size_t>(e.child)] = true;
  }
  UnionFind uf(n);
  for (const MstEdge& e : t.edges) {
    if (removed[static_cast<std::size_t>(e.child)]) continue;
    if (e.child == a || e.child == b || e.parent == a || e.parent == b) {
      continue;  // incident edges belong to X+_ab
    }
    uf.unite(e.child, e.parent);
  }
  // Label components by the sidedness of their X+ endpoints.
  constexpr int kNone = 0, kLeft = 1, kRight = 2;
  std::vector<int> label(n, kNone);
  bool valid = true;
  const auto classify = [&](PointId v) {
    if (v == a || v == b || !valid) return;
    const int side =
        boundary_curve_side(ps[a], ps[b], ps[v]) == Side::Left ? kLeft : kRight;
    int& slot = label[static_cast<std::size_t>(uf.find(v))];
    if (slot == kNone) {
      slot = side;
    } else if (slot != side) {
      valid = false;
    }
  };
  for (const MstEdge& e : crossing) {
    classify(e.child);
    classify(e.parent);
  }
  for (const MstEdge& e : t.edges) {
    if (e.child == a || e.parent == a || e.child == b || e.parent == b) {
      classify(e.child);
      classify(e.parent);
    }
  }
  info.valid = valid;
  if (!valid) return info;

  int forward;
  if (a == t.root) {
    forward = kRight;  // root convention: right side is forward
  } else {
    forward = label[static_cast<std::size_t>(uf.find(t.root))];
    if (forward == kNone) {
      throw GeneralPositionError("chord classification: unlabeled root component");
    }
  }
  info.facing =
      forward == kRight ? Facing::RightFacing : Facing::LeftFacing;
  const int backward = forward == kRight ? kLeft : kRight;
  for (std::size_t v = 0; v < n; ++v) {
    const PointId pv = static_cast<PointId>(v);
    if (pv == a || pv == b) continue;
    if (label[static_cast<std::size_t>(uf.find(pv))] == backward) {
      ++info.size;
      if (backward_out) backward_out->push_back(pv);
    }
  }
  return info;
}

}  // namespace

ChordRecord classify_chord(const PointSet& ps, const RootedMst& t, PointId a,
                           PointId b) {
  ChordRecord rec;
  rec.a = a;
  rec.b = b;
  const CrossingSets sets = crossing_set(ps, t, a, b);
  const ChordInfo info =
      classify_chord_core(ps, t, a, b, sets.crossing, &rec.backward_points);
  rec.valid = info.valid;
  rec.facing = info.facing;
  rec.size = info.size;
  return rec;
}

ChordInfo classify_chord_info(const PointSet& ps, const RootedMst& t,
                              PointId a, PointId b,
                              const std::vector<MstEdge>& crossing) {
  return classify_chord_core(ps, t, a, b, crossing, nullptr);
}

WallEdges classify_wall_edges(const PointSet& ps, const RootedMst& t,
                              PointId b, PointId c) {
  if (b == c) throw std::invalid_argument("classify_wall_edges: b == c");
  WallEdges out;
  const Point& pb = ps[b];
  const Point& pc = ps[c];
  for (const MstEdge& e : t.edges) {
    if (e.child == b || e.child == c || e.parent == b || e.parent == c) {
      continue;
    }
    if (!segments_cross_properly(pb, pc, ps[e.child], ps[e.parent])) continue;
    // A proper crossing has the endpoints strictly on opposite sides; an
    // entry crosses b->c from right to left, so its child sits on the right.
    if (orient(pb, pc, ps[e.child]) == Orientation::Right) {
      out.entries.push_back(e);
    } else {
      out.exits.push_back(e);
    }
  }
  return out;
}

bool assign_vertex_edge(const PointSet& ps, const FaceRef& face, MstEdge e) {
  const auto is_vertex = [&face](PointId v) {
    return v == face.apex || v == face.x || v == face.y;
  };
  PointId v;
  PointId other;
  if (is_vertex(e.child) && !is_vertex(e.parent)) {
    v = e.child;
    other = e.parent;
  } else if (is_vertex(e.parent) && !is_vertex(e.child)) {
    v = e.parent;
    other = e.child;
  } else if (is_vertex(e.child) && is_vertex(e.parent)) {
    return false;  // an edge along the face boundary has no exterior sector
  } else {
    throw std::invalid_argument("assign_vertex_edge: edge not incident");
  }
  const Point& pv = ps[v];
  const double dx = ps[other].x - pv.x;
  const double dy = ps[other].y - pv.y;
  const Point& pa = ps[face.apex];
  if (face.digon) {
    const Point& pb = ps[face.x];
    const double bx = pb.x - pa.x;
    const double by = pb.y - pa.y;
    if (v == face.apex) {
      // Exterior cone at the apex is split by the vertical ray below it.
      return face.east ? cw_between(bx, by, dx, dy, 0.0, -1.0)
                       : ccw_between(bx, by, dx, dy, 0.0, -1.0);
    }
    // At b the digon owns the full halfplane beyond the chord line.
    return face.east ? cw_between(bx, by, dx, dy, -bx, -by)
                     : ccw_between(bx, by, dx, dy, -bx, -by);
  }
  if (v == face.apex) return false;  // triangles own no sector at the apex
  const Point& px = ps[face.x];
  const Point& py = ps[face.y];
  if (v == face.x) {
    // Wall start: ccw between the extended chord ray and the wall direction.
    return ccw_between(px.x - pa.x, px.y - pa.y, dx, dy, py.x - px.x,
                       py.y - px.y);
  }
  // Wall end: cw between the extended chord ray and the reversed wall.
  return cw_between(py.x - pa.x, py.y - pa.y, dx, dy, px.x - py.x,
                    px.y - py.y);
}

FaceEvents face_events(const PointSet& ps, const RootedMst& t,
                       const FaceRef& face) {
  FaceEvents ev;
  PointId wp, wq;  // directed wall wp -> wq
  if (face.digon) {
    wp = face.east ? face.apex : face.x;
    wq = face.east ? face.x : face.apex;
  } else {
    wp = face.x;
    wq = face.y;
  }
  const Point& pp = ps[wp];
  const Point& pq = ps[wq];
  for (const MstEdge& e : t.edges) {
    if (e.child == wp || e.child == wq || e.parent == wp || e.parent == wq) {
      continue;
    }
    if (!segments_cross_properly(pp, pq, ps[e.child], ps[e.parent])) continue;
    if (orient(pp, pq, ps[e.child]) == Orientation::Right) {
      ev.wall_entries.push_back(e);
    } else {
      ev.wall_exits.push_back(e);
    }
  }
  std::vector<PointId> verts{face.apex, face.x};
  if (!face.digon) verts.push_back(face.y);
  for (PointId v : verts) {
    for (PointId w : t.children[static_cast<std::size_t>(v)]) {
      const MstEdge e{w, v};
      if (assign_vertex_edge(ps, face, e)) ev.vertex_entries.push_back(e);
    }
    const PointId p = t.parent[static_cast<std::size_t>(v)];
    if (p >= 0) {
      const MstEdge e{v, p};
      // Skip boundary edges (both endpoints on the face).
      const bool boundary = (p == face.apex || p == face.x || p == face.y);
      if (!boundary && assign_vertex_edge(ps, face, e)) {
        ev.vertex_exits.push_back(e);
      }
    }
  }
  return ev;
}

FaceCandidate classify_face(const PointSet& ps, const RootedMst& t,
                            const ChordInfo& chord_ax,
                            const std::optional<ChordInfo>& chord_ay,
                            const FaceRef& face) {
  FaceCandidate cand;
  cand.face = face;
  const PointId a = face.apex;
  if (face.digon) {
    if (!(ps[a].y < ps[face.x].y) || !chord_ax.valid) return cand;
    cand.events = face_events(ps, t, face);
    const std::size_t exits =
        cand.events.wall_exits.size() + cand.events.vertex_exits.size();
    if (a == t.root) {
      if (face.east && exits == 0) cand.kind = FaceKind::RootDigon;
      else if (!face.east && exits == 0 &&
               chord_ax.facing == Facing::RightFacing) {
        cand.kind = FaceKind::EntryDigon;
      }
      return cand;
    }
    const Facing exit_facing =
        face.east ? Facing::RightFacing : Facing::LeftFacing;
    const Facing entry_facing =
        face.east ? Facing::LeftFacing : Facing::RightFacing;
    if (exits == 1 && chord_ax.facing == exit_facing) {
      cand.kind = FaceKind::ExitDigon;
    } else if (exits == 0 && chord_ax.facing == entry_facing) {
      cand.kind = FaceKind::EntryDigon;
    }
    return cand;
  }
  if (!chord_ay.has_value()) {
    throw std::invalid_argument("classify_face: triangle needs both chords");
  }
  if (!(ps[a].y < ps[face.x].y) || !(ps[a].y < ps[face.y].y)) return cand;
  if (orient(ps[a], ps[face.x], ps[face.y]) != Orientation::Left) return cand;
  if (!chord_ax.valid || !chord_ay->valid) return cand;
  cand.events = face_events(ps, t, face);
  const std::size_t exits =
      cand.events.wall_exits.size() + cand.events.vertex_exits.size();
  const Facing fx = chord_ax.facing;
  const Facing fy = chord_ay->facing;
  if (fx == Facing::RightFacing && fy == Facing::RightFacing && exits == 0) {
    cand.kind = FaceKind::LRTriangle;
  } else if (fx == Facing::LeftFacing && fy == Facing::LeftFacing &&
             exits == 0) {
    cand.kind = FaceKind::RLTriangle;
  } else if (fx == Facing::LeftFacing && fy == Facing::RightFacing &&
             exits == 1 && a != t.root) {
    cand.kind = FaceKind::ExitTriangle;
  }
  return cand;
}

}  // namespace blobtree
