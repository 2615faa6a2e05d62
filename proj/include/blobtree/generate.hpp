#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "blobtree/point_set.hpp"

namespace blobtree {

enum class InstanceKind { Uniform, Cluster, Circle, Grid };

InstanceKind instance_kind_from_string(const std::string& s);
std::string to_string(InstanceKind kind);

/// Deterministic instance coordinates for (kind, n, seed). Grid and
/// circle apply a small jitter to restore general position; cluster is a
/// dense patch plus one far anchor point.
std::vector<std::pair<double, double>> generate_coords(InstanceKind kind,
                                                       int n,
                                                       std::uint64_t seed);

/// Validated point set for the generated coordinates.
PointSet generate(InstanceKind kind, int n, std::uint64_t seed);

}  // namespace blobtree
