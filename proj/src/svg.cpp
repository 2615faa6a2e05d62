#include "blobtree/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace blobtree {

namespace {

constexpr double kView = 800.0;
constexpr double kMargin = 0.05;

struct Mapper {
  double xlo, ylo, scale, xoff, yoff;
  explicit Mapper(const PointSet& ps) {
    double xhi, yhi;
    xlo = xhi = ps[0].x;
    ylo = yhi = ps[0].y;
    for (const Point& p : ps.points()) {
      xlo = std::min(xlo, p.x);
      xhi = std::max(xhi, p.x);
      ylo = std::min(ylo, p.y);
      yhi = std::max(yhi, p.y);
    }
    const double span = std::max({xhi - xlo, yhi - ylo, 1e-12});
    const double usable = kView * (1.0 - 2.0 * kMargin);
    scale = usable / span;
    xoff = (kView - (xhi - xlo) * scale) / 2.0;
    yoff = (kView - (yhi - ylo) * scale) / 2.0;
  }
  // y flipped to screen convention
  std::pair<double, double> map(const Point& p) const {
    return {xoff + (p.x - xlo) * scale,
            kView - (yoff + (p.y - ylo) * scale)};
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

void add_line(std::string& out, const Mapper& m, const Point& a,
              const Point& b, const char* color, const char* width) {
  const auto [x1, y1] = m.map(a);
  const auto [x2, y2] = m.map(b);
  out += "  <line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" +
         num(x2) + "\" y2=\"" + num(y2) + "\" stroke=\"" + color +
         "\" stroke-width=\"" + width + "\"/>\n";
}

}  // namespace

std::string render_svg(const PointSet& ps, const BlobTreeSolution& sol,
                       const RootedMst& mst) {
  const Mapper m(ps);
  std::string out;
  out +=
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      "width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  out += "  <rect width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";

  std::set<std::pair<PointId, PointId>> used;
  for (auto [i, j] : sol.tree_edges) {
    if (i > j) std::swap(i, j);
    used.insert({i, j});
  }
  // MST edges not drawn by the solution, in black.
  for (const MstEdge& e : mst.edges) {
    PointId i = e.child, j = e.parent;
    if (i > j) std::swap(i, j);
    if (used.count({i, j})) continue;
    add_line(out, m, ps[e.child], ps[e.parent], "#000000", "1");
  }
  for (const auto& [i, j] : sol.tree_edges) {
    add_line(out, m, ps[i], ps[j], "#2da44e", "2");
  }
  for (const Polygon& blob : sol.blobs) {
    out += "  <path d=\"";
    for (std::size_t i = 0; i < blob.vertices.size(); ++i) {
      const auto [x, y] = m.map(ps[blob.vertices[i]]);
      out += (i == 0 ? "M" : "L") + num(x) + " " + num(y) + " ";
    }
    out += "Z\" fill=\"none\" stroke=\"#1f6feb\" stroke-width=\"2\"/>\n";
  }
  for (const Point& p : ps.points()) {
    const auto [x, y] = m.map(p);
    out += "  <circle cx=\"" + num(x) + "\" cy=\"" + num(y) +
           "\" r=\"3\" fill=\"#24292f\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace blobtree
