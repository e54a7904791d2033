#include "sqcover/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace sqcover {
namespace {

// Distance from a square's center beyond which it cannot touch a disc: half
// diagonal plus slack for the thresholds used here.
constexpr double kSquareReach = 0.70710678118654757 + 1e-6;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

Point cell_corner(double edge, const Cell& cell, int dx, int dy) {
  const double scale = std::ldexp(edge, -cell.depth);
  return {scale * static_cast<double>(cell.ix + dx), scale * static_cast<double>(cell.iy + dy)};
}

Point cell_center(double edge, const Cell& cell) {
  const double scale = std::ldexp(edge, -cell.depth);
  return {scale * (static_cast<double>(cell.ix) + 0.5), scale * (static_cast<double>(cell.iy) + 0.5)};
}

double cell_area(double edge, const Cell& cell) {
  const double s = std::ldexp(edge, -cell.depth);
  return s * s;
}

CellStatus classify_cell(std::span<const SquareFrame> frames, double edge, const Cell& cell, CellThresholds thr) {
  const std::array<Point, 4> corners{cell_corner(edge, cell, 0, 0), cell_corner(edge, cell, 1, 0),
                                     cell_corner(edge, cell, 1, 1), cell_corner(edge, cell, 0, 1)};
  const Point center = cell_center(edge, cell);
  const double half_diag = 0.5 * std::ldexp(edge, -cell.depth) * 1.4142135623730951;

  bool all_disjoint = true;
  bool center_outside = true;
  for (const SquareFrame& f : frames) {
    const double reach = kSquareReach + half_diag + std::abs(thr.inner) + std::abs(thr.outer);
    if (std::hypot(center.x - f.center.x, center.y - f.center.y) > reach) continue;

    std::array<std::array<GuardedScalar, 4>, 4> s;
    bool inside = true;
    for (int c = 0; c < 4; ++c) {
      s[c] = f.slacks(corners[c]);
      for (const auto& v : s[c]) inside = inside && v.lower() >= thr.inner;
    }
    if (inside) return CellStatus::covered;

    bool separated = false;
    for (int k = 0; k < 4 && !separated; ++k) {
      bool all_out = true;
      for (int c = 0; c < 4; ++c) all_out = all_out && s[c][k].upper() <= thr.outer;
      separated = all_out;
    }
    if (!separated) {
      all_disjoint = false;
      if (center_outside && classify_point(f, center, thr.inner, thr.outer) != Containment::outside) {
        center_outside = false;
      }
    }
  }
  if (all_disjoint) return CellStatus::empty;
  if (center_outside) return CellStatus::witness;
  return CellStatus::unresolved;
}

std::vector<CellStatus> classify_cells_serial(std::span<const SquareFrame> frames, double edge,
                                              std::span<const Cell> cells, CellThresholds thr) {
  std::vector<CellStatus> out(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) out[i] = classify_cell(frames, edge, cells[i], thr);
  return out;
}

std::vector<CellStatus> classify_cells_omp(std::span<const SquareFrame> frames, double edge,
                                           std::span<const Cell> cells, CellThresholds thr) {
  std::vector<CellStatus> out(cells.size());
  const auto n = static_cast<std::ptrdiff_t>(cells.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = classify_cell(frames, edge, cells[static_cast<std::size_t>(i)], thr);
  }
  return out;
}

std::vector<CellStatus> classify_cells(std::span<const SquareFrame> frames, double edge,
                                       std::span<const Cell> cells, CellThresholds thr, Backend backend) {
  return backend == Backend::openmp ? classify_cells_omp(frames, edge, cells, thr)
                                    : classify_cells_serial(frames, edge, cells, thr);
}

double sample_uniform(std::uint64_t seed, std::uint64_t index, int k) {
  const std::uint64_t h = splitmix64(splitmix64(seed) ^ splitmix64(index * 4 + static_cast<std::uint64_t>(k)));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

Point sample_point(double edge, bool boundary, std::uint64_t seed, std::uint64_t index) {
  if (!boundary) return {edge * sample_uniform(seed, index, 0), edge * sample_uniform(seed, index, 1)};
  const double t = 4.0 * edge * sample_uniform(seed, index, 0);
  const int side = std::min(3, static_cast<int>(t / edge));
  const double s = std::min(edge, t - side * edge);
  switch (side) {
    case 0: return {s, 0.0};
    case 1: return {edge, s};
    case 2: return {edge - s, edge};
    default: return {0.0, edge - s};
  }
}

std::vector<std::uint8_t> flag_uncovered_samples(std::span<const SquareFrame> frames, double edge, bool boundary,
                                                 std::int64_t samples, std::uint64_t seed, Backend backend) {
  auto one = [&](std::size_t i) -> std::uint8_t {
    const Point p = sample_point(edge, boundary, seed, i);
    for (const SquareFrame& f : frames) {
      if (classify_point(f, p, 0.0, 0.0) != Containment::outside) return 0;
    }
    return 1;
  };
  return map_indices(static_cast<std::size_t>(samples), backend, one);
}

}  // namespace sqcover
