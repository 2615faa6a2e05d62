#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blobtree/solver.hpp"

namespace blobtree {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raw coordinates plus optional metadata, prior to validation.
struct RawInstance {
  std::string name;
  std::optional<std::uint64_t> seed;
  std::vector<std::pair<double, double>> coords;
};

/// Accepts either the plain format (one "x y" pair per line, '#'
/// comments) or a JSON document {name?, seed?, points: [[x,y],...]}.
RawInstance parse_instance(const std::string& text);

std::string serialize_instance_plain(const RawInstance& inst);
std::string serialize_instance_json(const RawInstance& inst);

struct ResultRecord {
  std::string instance;
  double cost = 0.0;
  std::vector<std::vector<PointId>> blobs;
  std::vector<std::pair<PointId, PointId>> tree_edges;
  double time_ms = 0.0;
  std::size_t edge_problems = 0;
  std::size_t wall_problems = 0;
  std::size_t chord_problems = 0;
};

ResultRecord make_result(const std::string& instance,
                         const BlobTreeSolution& sol, double time_ms,
                         std::size_t edge_problems, std::size_t wall_problems,
                         std::size_t chord_problems);

std::string serialize_result_json(const ResultRecord& rec);
ResultRecord parse_result_json(const std::string& text);

}  // namespace blobtree
