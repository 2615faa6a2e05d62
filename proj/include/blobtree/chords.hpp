#pragma once

#include <optional>
#include <vector>

#include "blobtree/mst.hpp"

namespace blobtree {

enum class Facing { LeftFacing, RightFacing };
enum class EndpointClass { LeftEndpoint, RightEndpoint };

/// X_ab and the incident part of X+_ab for a point pair.
struct CrossingSets {
  std::vector<MstEdge> crossing;  // X_ab: edges properly crossing segment ab
  std::vector<MstEdge> incident;  // edges incident to a or b
};

CrossingSets crossing_set(const PointSet& ps, const RootedMst& t, PointId a,
                          PointId b);

/// Endpoint classification against the boundary curve of (a below b).
/// v must be distinct from a and b.
EndpointClass classify_endpoint(const PointSet& ps, PointId a, PointId b,
                                PointId v);

/// Validity, facing and backward point set of the chord (a below b).
struct ChordRecord {
  PointId a = -1;
  PointId b = -1;
  bool valid = false;
  Facing facing = Facing::RightFacing;  // defined only if valid
  std::vector<PointId> backward_points;  // V_ab, ascending
  std::int64_t size = 0;                 // |V_ab|
};

ChordRecord classify_chord(const PointSet& ps, const RootedMst& t, PointId a,
                           PointId b);

/// Compact variant used by the solver: skips materializing V_ab.
struct ChordInfo {
  bool valid = false;
  Facing facing = Facing::RightFacing;
  std::int64_t size = 0;
};

ChordInfo classify_chord_info(const PointSet& ps, const RootedMst& t,
                              PointId a, PointId b,
                              const std::vector<MstEdge>& crossing);

/// Entry and exit edges of the directed wall b -> c: an MST edge is an
/// entry when it crosses the wall right to left (into the blob side) and
/// an exit when it crosses left to right.
struct WallEdges {
  std::vector<MstEdge> entries;
  std::vector<MstEdge> exits;
};

WallEdges classify_wall_edges(const PointSet& ps, const RootedMst& t,
                              PointId b, PointId c);

/// A face of the bottom-vertex fan: a triangle (apex, x, y) in ccw order
/// with wall x -> y, or a digon on the chord (apex, b) whose wall is
/// apex -> b when east and b -> apex when west.
struct FaceRef {
  PointId apex = -1;
  PointId x = -1;
  PointId y = -1;  // digon: y == x == b
  bool digon = false;
  bool east = false;  // digon orientation
};

inline FaceRef triangle_face(PointId apex, PointId x, PointId y) {
  return FaceRef{apex, x, y, false, false};
}
inline FaceRef digon_face(PointId apex, PointId b, bool east) {
  return FaceRef{apex, b, b, true, east};
}

/// True iff the directed MST edge e, incident to a vertex of the face,
/// emanates inside the face's exterior extension sector at that vertex.
bool assign_vertex_edge(const PointSet& ps, const FaceRef& face, MstEdge e);

/// All MST-edge events of a face: entries and exits through the wall,
/// plus vertex-assigned entries (child edges) and outgoing parent edges.
struct FaceEvents {
  std::vector<MstEdge> wall_entries;
  std::vector<MstEdge> wall_exits;
  std::vector<MstEdge> vertex_entries;
  std::vector<MstEdge> vertex_exits;  // parent edges emanating in-sector
};

FaceEvents face_events(const PointSet& ps, const RootedMst& t,
                       const FaceRef& face);

enum class FaceKind {
  LRTriangle,
  RLTriangle,
  ExitTriangle,
  EntryDigon,
  ExitDigon,
  RootDigon,
  Invalid
};

struct FaceCandidate {
  FaceKind kind = FaceKind::Invalid;
  FaceRef face;
  FaceEvents events;
};

/// Classifies a fan face given the chord records of its bounding chords.
FaceCandidate classify_face(const PointSet& ps, const RootedMst& t,
                            const ChordInfo& chord_ax,
                            const std::optional<ChordInfo>& chord_ay,
                            const FaceRef& face);

}  // namespace blobtree
