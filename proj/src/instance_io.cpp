#include "blobtree/instance_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace blobtree {

namespace {

// Shortest decimal that round-trips (17 significant digits is always
// enough for IEEE doubles).
std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

RawInstance parse_plain(const std::string& text) {
  RawInstance inst;
  std::istringstream ss(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::size_t pos = 0;
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos == line.size()) continue;
    std::istringstream ls(line);
    double x, y;
    if (!(ls >> x >> y)) {
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected two coordinates");
    }
    std::string trailing;
    if (ls >> trailing) {
      throw ParseError("line " + std::to_string(lineno) +
                       ": trailing field '" + trailing + "'");
    }
    inst.coords.emplace_back(x, y);
  }
  if (inst.coords.empty()) {
    throw ParseError("instance contains no points");
  }
  return inst;
}

RawInstance parse_json_instance(const std::string& text) {
  RawInstance inst;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("points") ||
      !doc["points"].is_array()) {
    throw ParseError("JSON instance must contain a 'points' array");
  }
  if (doc.contains("name")) inst.name = doc["name"].get<std::string>();
  if (doc.contains("seed")) inst.seed = doc["seed"].get<std::uint64_t>();
  std::size_t idx = 0;
  for (const auto& item : doc["points"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() ||
        !item[1].is_number()) {
      throw ParseError("points[" + std::to_string(idx) +
                       "] must be a pair of numbers");
    }
    inst.coords.emplace_back(item[0].get<double>(), item[1].get<double>());
    ++idx;
  }
  if (inst.coords.empty()) {
    throw ParseError("instance contains no points");
  }
  return inst;
}

}  // namespace

RawInstance parse_instance(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_json_instance(text);
    break;
  }
  return parse_plain(text);
}

std::string serialize_instance_plain(const RawInstance& inst) {
  std::string out;
  if (!inst.name.empty()) out += "# " + inst.name + "\n";
  for (const auto& [x, y] : inst.coords) {
    out += fmt_double(x) + " " + fmt_double(y) + "\n";
  }
  return out;
}

std::string serialize_instance_json(const RawInstance& inst) {
  nlohmann::json doc;
  if (!inst.name.empty()) doc["name"] = inst.name;
  if (inst.seed) doc["seed"] = *inst.seed;
  auto pts = nlohmann::json::array();
  for (const auto& [x, y] : inst.coords) {
    pts.push_back(nlohmann::json::array({x, y}));
  }
  doc["points"] = pts;
  return doc.dump(2) + "\n";
}

ResultRecord make_result(const std::string& instance,
                         const BlobTreeSolution& sol, double time_ms,
                         std::size_t edge_problems, std::size_t wall_problems,
                         std::size_t chord_problems) {
  ResultRecord rec;
  rec.instance = instance;
  rec.cost = sol.cost;
  for (const Polygon& blob : sol.blobs) rec.blobs.push_back(blob.vertices);
  rec.tree_edges = sol.tree_edges;
  for (auto& [i, j] : rec.tree_edges) {
    if (i > j) std::swap(i, j);
  }
  std::sort(rec.tree_edges.begin(), rec.tree_edges.end());
  rec.time_ms = time_ms;
  rec.edge_problems = edge_problems;
  rec.wall_problems = wall_problems;
  rec.chord_problems = chord_problems;
  return rec;
}

std::string serialize_result_json(const ResultRecord& rec) {
  nlohmann::json doc;
  doc["instance"] = rec.instance;
  doc["cost"] = rec.cost;
  auto blobs = nlohmann::json::array();
  for (const auto& blob : rec.blobs) blobs.push_back(blob);
  doc["blobs"] = blobs;
  auto edges = nlohmann::json::array();
  for (const auto& [i, j] : rec.tree_edges) {
    edges.push_back(nlohmann::json::array({i, j}));
  }
  doc["tree_edges"] = edges;
  doc["time_ms"] = rec.time_ms;
  doc["table_sizes"] = {{"edge", rec.edge_problems},
                        {"wall", rec.wall_problems},
                        {"chord", rec.chord_problems}};
  return doc.dump(2) + "\n";
}

ResultRecord parse_result_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  ResultRecord rec;
  rec.instance = doc.value("instance", std::string{});
  rec.cost = doc.at("cost").get<double>();
  for (const auto& blob : doc.at("blobs")) {
    rec.blobs.push_back(blob.get<std::vector<PointId>>());
  }
  for (const auto& e : doc.at("tree_edges")) {
    rec.tree_edges.emplace_back(e[0].get<PointId>(), e[1].get<PointId>());
  }
  rec.time_ms = doc.value("time_ms", 0.0);
  if (doc.contains("table_sizes")) {
    rec.edge_problems = doc["table_sizes"].value("edge", 0);
    rec.wall_problems = doc["table_sizes"].value("wall", 0);
    rec.chord_problems = doc["table_sizes"].value("chord", 0);
  }
  return rec;
}

}  // namespace blobtree
