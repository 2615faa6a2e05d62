#include "blobtree/generate.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace blobtree {

namespace {

double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

constexpr double kPi = 3.14159265358979323846;

std::vector<std::pair<double, double>> raw_coords(InstanceKind kind, int n,
                                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL +
                      static_cast<std::uint64_t>(kind) + 1);
  std::vector<std::pair<double, double>> out;
  out.reserve(static_cast<std::size_t>(n));
  switch (kind) {
    case InstanceKind::Uniform: {
      for (int i = 0; i < n; ++i) {
        const double x = unit_double(rng);
        const double y = unit_double(rng);
        out.emplace_back(x, y);
      }
      break;
    }
    case InstanceKind::Cluster: {
      // One low anchor plus a dense patch at distance 5: a ring that
      // carries the hull and an interior grid that inflates the MST.
      out.emplace_back(0.35 + 0.01 * unit_double(rng),
                       0.01 * unit_double(rng));
      const int m = n - 1;
      const double cx = 0.35, cy = 5.0, R = 0.05;
      const int ring = m <= 4 ? m : (m * 11 + 10) / 20;  // ~55% on the ring
      for (int i = 0; i < ring; ++i) {
        const double a = 2.0 * kPi * (i + 0.35 * unit_double(rng)) / ring;
        const double r = R * (1.0 + 0.02 * (unit_double(rng) - 0.5));
        out.emplace_back(cx + r * std::cos(a), cy + r * std::sin(a));
      }
      const int inner = m - ring;
      if (inner > 0) {
        const int g = static_cast<int>(std::ceil(std::sqrt(inner)));
        int placed = 0;
        for (int iy = 0; iy < g && placed < inner; ++iy) {
          for (int ix = 0; ix < g && placed < inner; ++ix) {
            const double fx = (ix + 0.5) / g - 0.5;
            const double fy = (iy + 0.5) / g - 0.5;
            const double jx = 0.10 * (unit_double(rng) - 0.5) / g;
            const double jy = 0.10 * (unit_double(rng) - 0.5) / g;
            out.emplace_back(cx + 1.2 * R * (fx + jx),
                             cy + 1.2 * R * (fy + jy));
            ++placed;
          }
        }
      }
      break;
    }
    case InstanceKind::Circle: {
      for (int i = 0; i < n; ++i) {
        const double a = 2.0 * kPi * i / n;
        out.emplace_back(0.5 + 0.5 * std::cos(a), 0.5 + 0.5 * std::sin(a));
      }
      break;
    }
    case InstanceKind::Grid: {
      const int g = static_cast<int>(std::ceil(std::sqrt(n)));
      for (int i = 0; i < n; ++i) {
        const int ix = i % g;
        const int iy = i / g;
        out.emplace_back((ix + 0.5) / g, (iy + 0.5) / g);
      }
      break;
    }
  }
  if (kind == InstanceKind::Circle || kind == InstanceKind::Grid) {
    // Jitter at a percent of the nearest-neighbor spacing: large enough
    // that orientation and cost comparisons are resolved well above the
    // floating-point noise floor, small enough to keep the shape.
    const double spacing =
        kind == InstanceKind::Grid
            ? 1.0 / std::ceil(std::sqrt(static_cast<double>(n)))
            : kPi / static_cast<double>(n);
    out = jitter_coords(std::move(out), 0.02 * spacing, seed ^ 0x5bf0a8b1ULL);
  }
  return out;
}

}  // namespace

InstanceKind instance_kind_from_string(const std::string& s) {
  if (s == "uniform") return InstanceKind::Uniform;
  if (s == "cluster") return InstanceKind::Cluster;
  if (s == "circle") return InstanceKind::Circle;
  if (s == "grid") return InstanceKind::Grid;
  throw std::invalid_argument("unknown instance kind '" + s + "'");
}

std::string to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::Uniform: return "uniform";
    case InstanceKind::Cluster: return "cluster";
    case InstanceKind::Circle: return "circle";
    case InstanceKind::Grid: return "grid";
  }
  return "?";
}

std::vector<std::pair<double, double>> generate_coords(InstanceKind kind,
                                                       int n,
                                                       std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generate: n must be >= 1");
  return raw_coords(kind, n, seed);
}

PointSet generate(InstanceKind kind, int n, std::uint64_t seed) {
  // A general-position failure is measure-zero; retry with a salted seed
  // so the result stays deterministic.
  for (std::uint64_t salt = 0; salt < 16; ++salt) {
    auto coords = generate_coords(kind, n, seed + (salt << 32));
    try {
      return PointSet::validated(std::move(coords));
    } catch (const GeneralPositionError&) {
      continue;
    }
  }
  throw GeneralPositionError("generate: could not reach general position");
}

}  // namespace blobtree
