#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sqcover/constructions.hpp"
#include "sqcover/kernels.hpp"

namespace sqcover {

enum class Verdict { covered, gap, undecided };

std::string_view to_string(Verdict v);

inline constexpr double kDefaultMargin = 1e-9;
inline constexpr int kDefaultMaxDepth = 14;
inline constexpr double kTightTolerance = 1e-9;

struct CoverageCertificate {
  Verdict verdict = Verdict::undecided;
  std::vector<Point> witnesses;
  double undecided_area_bound = 0.0;
  int max_depth_used = 0;
  /// Margin of a strict run; 0 in tight mode.
  double margin = 0.0;
  /// Tight mode: covered means every point lies within `tolerance` of the
  /// union (cover test at -tolerance), and each gap witness is outside every
  /// square by at least tolerance / 2.
  bool tight = false;
  double tolerance = 0.0;
};

struct GapReport {
  std::array<std::vector<SideInterval>, 4> uncovered;
  double total_uncovered_length = 0.0;
};

struct BoundaryResult {
  CoverageCertificate certificate;
  GapReport gaps;
};

struct VerifyOptions {
  double margin = kDefaultMargin;
  int max_depth = kDefaultMaxDepth;
  bool tight = false;
  double tight_tolerance = kTightTolerance;
  Backend backend = Backend::openmp;
  /// Per-level cell cap of the quadtree; exceeding it ends the run undecided.
  std::size_t max_cells_per_level = std::size_t{1} << 22;
};

/// Strict thresholds are (+margin, -margin); tight ones (-tol, -tol/2).
CellThresholds thresholds_for(const VerifyOptions& opt);

BoundaryResult verify_boundary(const Configuration& cfg, const VerifyOptions& opt);
BoundaryResult verify_boundary(const Configuration& cfg, double margin);

CoverageCertificate verify_interior(const Configuration& cfg, const VerifyOptions& opt);
CoverageCertificate verify_interior(const Configuration& cfg, int max_depth, double margin);

/// Dispatches on cfg.mode.
CoverageCertificate verify(const Configuration& cfg, const VerifyOptions& opt);

/// Boundary length not covered at margin 0 (float-guard inclusive).
double uncovered_boundary_length(const Configuration& cfg);

/// Union of closed intervals on [0, len] and its complement.
std::vector<SideInterval> merge_intervals(std::vector<SideInterval> intervals);
std::vector<SideInterval> complement_intervals(const std::vector<SideInterval>& merged, double len, int side);

struct OracleResult {
  bool uncovered_found = false;
  std::optional<Point> witness;
  /// Uncovered fraction times the measure sampled (area or perimeter).
  double estimate = 0.0;
};

/// Uniform sampling over the area (interior mode) or the perimeter (boundary
/// mode); a sample is uncovered when certainly outside every square.
OracleResult monte_carlo_oracle(const Configuration& cfg, std::int64_t samples, std::uint64_t seed,
                                Backend backend = Backend::openmp);

/// Upper bound on the uncovered area from a fixed-depth quadtree: cells that
/// are certainly empty plus cells still unresolved at max_depth. 0 iff the
/// quadtree certifies coverage.
double uncovered_area_bound(const Configuration& cfg, int max_depth, CellThresholds thr,
                            Backend backend = Backend::openmp);

}  // namespace sqcover
