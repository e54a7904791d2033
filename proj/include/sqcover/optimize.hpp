#pragma once

#include <cstdint>
#include <vector>

#include "sqcover/constructions.hpp"
#include "sqcover/kernels.hpp"
#include "sqcover/verify.hpp"

namespace sqcover {

struct SearchParams {
  int restarts = 16;
  /// Objective evaluations per local search.
  int inner_iterations = 200000;
  double initial_step = 0.05;
  double shrink_factor = 0.5;
  double sigma_perturb = 0.05;
  double time_budget_s = 60.0;
  std::uint64_t seed = 1;
  /// Seed restarts from the known constructions and perturbations of them.
  bool warm_start = false;
  double edge_tolerance = 1e-6;
  Backend backend = Backend::openmp;

  /// Throws std::invalid_argument unless every field is positive and
  /// shrink_factor < 1.
  void validate() const;
};

struct HistoryEntry {
  int restart = 0;
  double edge = 0.0;
  /// Search objective reached by that restart (0 = covered).
  double penalty = 0.0;

  friend bool operator==(const HistoryEntry&, const HistoryEntry&) = default;
};

struct SearchResult {
  double best_edge = 0.0;
  Configuration config;
  CoverageCertificate certificate;
  std::vector<HistoryEntry> history;
};

/// Area of [0, edge]^2 outside every square, by repeated convex polygon
/// difference (no cancellation, so tiny slivers keep their relative accuracy).
double uncovered_area(const Configuration& cfg);

/// Quantity the local search drives to 0: uncovered_area (interior) or
/// uncovered_boundary_length (boundary).
double search_objective(const Configuration& cfg);

/// Boundary mode: uncovered_boundary_length. Interior mode: 0 when
/// verify_interior certifies coverage in tight mode, otherwise the tight
/// fixed-depth quadtree bound on the uncovered area (> 0).
double penalty(const Configuration& cfg, Backend backend = Backend::openmp);

/// Gaussian jitter of every center coordinate and angle; deterministic in seed.
Configuration perturb(const Configuration& cfg, double sigma, std::uint64_t seed);

/// Pattern search over the 3n pose parameters at fixed edge. Returns cfg0
/// unchanged when it already has objective 0. If `trace` is given, the
/// objective after every sweep is appended.
Configuration local_search(const Configuration& cfg0, const SearchParams& params,
                           std::vector<double>* trace = nullptr);

/// Outer search on the edge below hi (sqrt n for the interior problem, n for
/// the boundary problem): galloping steps up from the best certified start
/// until a probe fails, then bisection. An edge counts as feasible when some
/// restart reaches objective 0 and verify certifies it in tight mode. `seeds`
/// are extra warm starts (padded with spare squares up to n).
SearchResult max_edge_search(int n, CoverMode mode, const SearchParams& params,
                             const std::vector<Configuration>& seeds = {});

}  // namespace sqcover
