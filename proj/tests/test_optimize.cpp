#include <omp.h>

#include <random>

#include <stdexcept>

#include "doctest.h"
#include "oracle.hpp"
#include "sqcover/constants.hpp"
#include "sqcover/io.hpp"
#include "sqcover/optimize.hpp"

using namespace sqcover;

TEST_CASE("exact uncovered area agrees with a brute-force grid count") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 15; ++t) {
    Configuration cfg = oracle::random_config(rng, 1 + t % 5, 1.0 + 0.15 * (t % 8), CoverMode::interior);
    double exact = uncovered_area(cfg);
    double brute = oracle::grid_uncovered_area(cfg, 600);
    CHECK(std::abs(exact - brute) < 0.02 * cfg.edge);
    CHECK(exact >= 0.0);
    CHECK(exact <= cfg.edge * cfg.edge + 1e-12);
  }
}

TEST_CASE("optima have zero objective and zero penalty") {
  for (int n = 1; n <= 5; ++n) {
    Configuration cfg = construct_interior(n);
    CHECK(uncovered_area(cfg) < 1e-12);
    CHECK(penalty(cfg) == 0.0);
  }
  for (int n : {4, 5, 8}) {
    CHECK(search_objective(construct_boundary(n)) < 1e-12);
    CHECK(penalty(construct_boundary(n)) < 1e-12);
  }
  Configuration q = oracle::with_edge(construct_interior(4), 2.1);
  CHECK(uncovered_area(q) == doctest::Approx(2.1 * 2.1 - 4.0).epsilon(1e-12));
  CHECK(penalty(q) >= uncovered_area(q));
}

TEST_CASE("perturb is deterministic in the seed") {
  Configuration c = construct_interior(3);
  CHECK(perturb(c, 0.05, 4).squares == perturb(c, 0.05, 4).squares);
  CHECK(perturb(c, 0.05, 4).squares != perturb(c, 0.05, 5).squares);
  CHECK(perturb(c, 0.0, 4).squares == c.squares);
}

TEST_CASE("local search never increases the objective and repairs small perturbations") {
  SearchParams p;
  p.inner_iterations = 20000;
  Configuration start = oracle::with_edge(perturb(construct_interior(4), 0.05, 3), 1.95);
  std::vector<double> trace;
  Configuration out = local_search(start, p, &trace);
  REQUIRE_FALSE(trace.empty());
  for (std::size_t i = 1; i < trace.size(); ++i) REQUIRE(trace[i] <= trace[i - 1]);
  CHECK(search_objective(out) <= search_objective(start));
  VerifyOptions o;
  o.tight = true;
  CHECK(verify(out, o).verdict == Verdict::covered);
  Configuration done = construct_interior(4);
  CHECK(local_search(done, p).squares == done.squares);
}

TEST_CASE("parameter validation") {
  SearchParams p;
  CHECK_NOTHROW(p.validate());
  p.shrink_factor = 1.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = SearchParams{};
  p.restarts = 0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("max_edge_search stays below the proven optima and certifies what it reports") {
  SearchParams p;
  p.restarts = 8;
  p.inner_iterations = 5000;
  p.warm_start = true;
  p.time_budget_s = 600;
  SearchResult r2 = max_edge_search(2, CoverMode::interior, p);
  CHECK(r2.best_edge <= 1.0 + 1e-6);
  CHECK(r2.best_edge >= 1.0 - 1e-6);
  CHECK(r2.certificate.verdict == Verdict::covered);
  CHECK(r2.config.edge == r2.best_edge);
  CHECK_FALSE(r2.history.empty());

  SearchResult b4 = max_edge_search(4, CoverMode::boundary, p);
  CHECK(b4.best_edge <= 2.0 + 1e-6);
  CHECK(b4.best_edge >= 2.0 - 1e-6);
  CHECK(b4.certificate.verdict == Verdict::covered);
}

TEST_CASE("search results do not depend on the worker count or the backend") {
  SearchParams p;
  p.restarts = 8;
  p.inner_iterations = 2000;
  p.time_budget_s = 600;
  p.seed = 5;
  omp_set_num_threads(1);
  std::string one = serialize_search_result(max_edge_search(2, CoverMode::interior, p));
  omp_set_num_threads(4);
  std::string four = serialize_search_result(max_edge_search(2, CoverMode::interior, p));
  p.backend = Backend::serial;
  std::string serial = serialize_search_result(max_edge_search(2, CoverMode::interior, p));
  CHECK(one == four);
  CHECK(one == serial);
}
