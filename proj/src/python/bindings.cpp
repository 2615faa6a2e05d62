#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "blobtree/generate.hpp"
#include "blobtree/oracle.hpp"
#include "blobtree/svg.hpp"

namespace py = pybind11;
using namespace blobtree;

namespace {

using Coords = std::vector<std::pair<double, double>>;

PointSet make_point_set(const Coords& pts, std::optional<double> jitter,
                        std::uint64_t seed) {
  Coords coords = pts;
  if (jitter) coords = jitter_coords(std::move(coords), *jitter, seed);
  return PointSet::validated(std::move(coords));
}

py::dict solution_dict(const BlobTreeSolution& sol) {
  py::dict d;
  py::list blobs;
  for (const Polygon& b : sol.blobs) blobs.append(b.vertices);
  py::list edges;
  for (const auto& [i, j] : sol.tree_edges) {
    edges.append(py::make_tuple(i, j));
  }
  d["cost"] = sol.cost;
  d["blobs"] = blobs;
  d["tree_edges"] = edges;
  return d;
}

}  // namespace

PYBIND11_MODULE(blobtree, m) {
  m.doc() = "minimum-cost blob-tree solver";

  m.def(
      "solve",
      [](const Coords& pts, std::optional<double> jitter, std::uint64_t seed) {
        const PointSet ps = make_point_set(pts, jitter, seed);
        const SolveResult res = solve(ps);
        py::dict d = solution_dict(res.solution);
        d["cost"] = res.cost;
        return d;
      },
      py::arg("points"), py::arg("jitter") = std::nullopt,
      py::arg("seed") = 0,
      "Optimal blob-tree of a planar point set in O(n^3).");

  m.def(
      "mst_subset_oracle",
      [](const Coords& pts) {
        const PointSet ps = make_point_set(pts, std::nullopt, 0);
        const OracleResult res = mst_subset_oracle(ps);
        py::dict d = solution_dict(res.solution);
        d["nodes_examined"] = res.nodes_examined;
        return d;
      },
      py::arg("points"),
      "Exhaustive baseline over MST-edge labelings (n <= 22).");

  m.def(
      "partition_oracle",
      [](const Coords& pts) {
        const PointSet ps = make_point_set(pts, std::nullopt, 0);
        const OracleResult res = partition_oracle(ps);
        py::dict d = solution_dict(res.solution);
        d["nodes_examined"] = res.nodes_examined;
        return d;
      },
      py::arg("points"),
      "Exhaustive baseline over set partitions (n <= 10).");

  m.def(
      "mst",
      [](const Coords& pts) {
        const PointSet ps = make_point_set(pts, std::nullopt, 0);
        const RootedMst t = build_mst(ps);
        py::dict d;
        py::list edges;
        for (const MstEdge& e : t.edges) {
          edges.append(py::make_tuple(e.child, e.parent));
        }
        d["root"] = t.root;
        d["edges"] = edges;
        d["weight"] = t.total_weight;
        return d;
      },
      py::arg("points"), "Rooted Euclidean MST (edges child -> parent).");

  m.def(
      "generate",
      [](const std::string& kind, int n, std::uint64_t seed) {
        return generate_coords(instance_kind_from_string(kind), n, seed);
      },
      py::arg("kind"), py::arg("n"), py::arg("seed") = 0,
      "Deterministic instance coordinates (uniform|cluster|circle|grid).");

  m.def(
      "validate",
      [](const Coords& pts, const std::vector<std::vector<PointId>>& blobs,
         const std::vector<std::pair<PointId, PointId>>& tree_edges,
         double cost) {
        const PointSet ps = make_point_set(pts, std::nullopt, 0);
        BlobTreeSolution sol;
        for (const auto& b : blobs) sol.blobs.push_back(Polygon{b});
        sol.tree_edges = tree_edges;
        sol.cost = cost;
        std::vector<std::string> out;
        for (const Violation& v : validate_solution(ps, sol)) {
          out.push_back(v.what);
        }
        return out;
      },
      py::arg("points"), py::arg("blobs"), py::arg("tree_edges"),
      py::arg("cost"), "Structural violations of a solution (empty = ok).");

  m.def(
      "render_svg",
      [](const Coords& pts) {
        const PointSet ps = make_point_set(pts, std::nullopt, 0);
        const SolveResult res = solve(ps);
        const RootedMst t = build_mst(ps);
        return render_svg(ps, res.solution, t);
      },
      py::arg("points"), "Solve and render an SVG drawing.");
}
