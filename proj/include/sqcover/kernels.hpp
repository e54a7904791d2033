#pragma once

// Data-parallel inner loops. Every kernel has an OpenMP implementation and a
// plain serial reference; both write results into index-addressed slots so the
// output never depends on the worker count.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sqcover/geom.hpp"

namespace sqcover {

enum class Backend { serial, openmp };

/// Apply fn to every index in [0, n) and collect the results in order.
template <class Fn>
auto map_indices(std::size_t n, Backend backend, Fn&& fn) -> std::vector<decltype(fn(std::size_t{}))> {
  std::vector<decltype(fn(std::size_t{}))> out(n);
  if (backend == Backend::openmp) {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
  }
  return out;
}

/// Dyadic cell of the quadtree over [0, edge]^2: [ix, ix+1] x [iy, iy+1] in
/// units of edge / 2^depth.
struct Cell {
  std::int64_t ix = 0;
  std::int64_t iy = 0;
  int depth = 0;
};

enum class CellStatus : std::uint8_t {
  covered,     ///< all four corners inside one square at the inner threshold
  empty,       ///< every square certainly misses the whole cell
  witness,     ///< the center is certainly outside every square
  unresolved,
};

struct CellThresholds {
  double inner = 0.0;  ///< cover test: every slack >= inner
  double outer = 0.0;  ///< uncovered test: some slack <= outer
};

CellStatus classify_cell(std::span<const SquareFrame> frames, double edge, const Cell& cell, CellThresholds thr);

std::vector<CellStatus> classify_cells(std::span<const SquareFrame> frames, double edge,
                                       std::span<const Cell> cells, CellThresholds thr, Backend backend);
std::vector<CellStatus> classify_cells_serial(std::span<const SquareFrame> frames, double edge,
                                              std::span<const Cell> cells, CellThresholds thr);
std::vector<CellStatus> classify_cells_omp(std::span<const SquareFrame> frames, double edge,
                                           std::span<const Cell> cells, CellThresholds thr);

Point cell_corner(double edge, const Cell& cell, int dx, int dy);
Point cell_center(double edge, const Cell& cell);
double cell_area(double edge, const Cell& cell);

/// Deterministic per-index uniform double in [0, 1); stream `k` of sample i.
double sample_uniform(std::uint64_t seed, std::uint64_t index, int k);

/// Flags (1 = certainly outside every square) for `samples` points; sample i
/// depends only on (seed, i). Boundary samples are uniform in arclength.
std::vector<std::uint8_t> flag_uncovered_samples(std::span<const SquareFrame> frames, double edge, bool boundary,
                                                 std::int64_t samples, std::uint64_t seed, Backend backend);
Point sample_point(double edge, bool boundary, std::uint64_t seed, std::uint64_t index);

}  // namespace sqcover
