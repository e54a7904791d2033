#include "sqcover/optimize.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "sqcover/constants.hpp"
#include "sqcover/geom.hpp"

namespace sqcover {
namespace {

using Poly = std::vector<Point>;
using Clock = std::chrono::steady_clock;

constexpr int kPenaltyDepth = 10;
constexpr std::size_t kPenaltyCellCap = std::size_t{1} << 18;
constexpr std::size_t kBatch = 8;
constexpr double kInitialStride = 0.02;
constexpr double kMinStep = 1e-9;
constexpr int kMaxKicks = 64;
// Basin hopping: once the step falls below kMinStep the search restarts from
// the best point plus a Gaussian kick.
constexpr double kKickScale = 0.3;
constexpr double kKickStep = 0.5;

double poly_area(const Poly& p) {
  double a = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point& u = p[i];
    const Point& v = p[(i + 1) % p.size()];
    a += u.x * v.y - v.x * u.y;
  }
  return 0.5 * a;
}

// Part of convex p with sign * (n.x - d) <= 0.
Poly clip(const Poly& p, Point n, double d, double sign) {
  Poly out;
  if (p.empty()) return out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point& a = p[i];
    const Point& b = p[(i + 1) % p.size()];
    const double fa = sign * (dot(n, a) - d);
    const double fb = sign * (dot(n, b) - d);
    if (fa <= 0.0) out.push_back(a);
    if ((fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0)) {
      const double t = fa / (fa - fb);
      out.push_back(a + t * (b - a));
    }
  }
  if (out.size() < 3) out.clear();
  return out;
}

// Convex pieces of p outside the unit square sq.
void subtract(const Poly& p, const PlacedSquare& sq, std::vector<Poly>& out) {
  const double c = std::cos(sq.angle());
  const double s = std::sin(sq.angle());
  const std::array<Point, 4> normals{Point{c, s}, Point{-c, -s}, Point{-s, c}, Point{s, -c}};
  Poly rest = p;
  for (const Point& n : normals) {
    const double d = dot(n, sq.center()) + 0.5;
    Poly outside = clip(rest, n, d, -1.0);
    if (!outside.empty() && poly_area(outside) > 0.0) out.push_back(std::move(outside));
    rest = clip(rest, n, d, 1.0);
    if (rest.empty()) return;
  }
}

struct Gaussian {
  std::uint64_t seed;
  std::uint64_t counter = 0;
  double next() {
    // Box-Muller on the per-index stream.
    const double u1 = std::max(sample_uniform(seed, counter, 0), 0x1.0p-60);
    const double u2 = sample_uniform(seed, counter, 1);
    ++counter;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }
  double uniform() { return sample_uniform(seed, counter++, 2); }
};

std::vector<double> pack(const Configuration& cfg) {
  std::vector<double> t;
  t.reserve(3 * cfg.squares.size());
  for (const auto& sq : cfg.squares) {
    t.push_back(sq.center().x);
    t.push_back(sq.center().y);
    t.push_back(sq.angle());
  }
  return t;
}

Configuration unpack(const Configuration& like, const std::vector<double>& t) {
  Configuration cfg;
  cfg.edge = like.edge;
  cfg.mode = like.mode;
  for (std::size_t i = 0; i + 2 < t.size(); i += 3) cfg.squares.emplace_back(Point{t[i], t[i + 1]}, t[i + 2]);
  return cfg;
}

Configuration scaled(const Configuration& cfg, double edge) {
  Configuration out = cfg;
  const double k = edge / cfg.edge;
  out.edge = edge;
  for (auto& sq : out.squares) sq = PlacedSquare(k * sq.center(), sq.angle());
  return out;
}

Configuration padded(Configuration cfg, int n, CoverMode mode) {
  cfg.mode = mode;
  if (cfg.squares.empty()) cfg.squares.emplace_back(Point{0.5, 0.5}, 0.0);
  while (static_cast<int>(cfg.squares.size()) < n) cfg.squares.push_back(cfg.squares.front());
  cfg.squares.resize(static_cast<std::size_t>(n));
  return cfg;
}

Configuration random_start(int n, CoverMode mode, double edge, std::uint64_t seed) {
  Gaussian g{seed};
  Configuration cfg;
  cfg.edge = edge;
  cfg.mode = mode;
  for (int i = 0; i < n; ++i) {
    const double x = g.uniform() * edge;
    const double y = g.uniform() * edge;
    cfg.squares.emplace_back(Point{x, y}, g.uniform() * kHalfPi);
  }
  return cfg;
}

// Known coverings with at most n squares, best edge first.
std::vector<Configuration> library(int n, CoverMode mode) {
  std::vector<Configuration> out;
  if (mode == CoverMode::boundary) {
    for (int m = n; m >= 2; --m) {
      try {
        out.push_back(padded(construct_boundary(m), n, mode));
        break;
      } catch (const std::invalid_argument&) {
      }
    }
  }
  out.push_back(padded(construct_interior(std::clamp(n, 1, 5)), n, mode));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.edge > b.edge; });
  return out;
}

bool certified(const Configuration& cfg, Backend backend) {
  VerifyOptions opt;
  opt.tight = true;
  opt.backend = backend;
  opt.max_cells_per_level = kPenaltyCellCap;
  return verify(cfg, opt).verdict == Verdict::covered;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Boundary score driven by the local search: sum of squared gap lengths.
// Plain uncovered length is piecewise linear and traps the search whenever a
// gap could only move to another side at an exchange rate above 1 (around a
// vertex square the rate is |l'(x)|); squaring rewards splitting gaps, which
// lets the slack travel around the square. 0 exactly when covered.
double boundary_score(const Configuration& cfg) {
  double score = 0.0;
  for (int side = 0; side < 4; ++side) {
    const Segment seg = cfg.side(side);
    std::vector<SideInterval> traces;
    for (const auto& sq : cfg.squares) {
      if (auto iv = clip_segment(SquareFrame(sq), seg, 0.0, -1, side)) traces.push_back(*iv);
    }
    for (const auto& g : complement_intervals(merge_intervals(std::move(traces)), cfg.edge, side)) {
      score += g.length() * g.length();
    }
  }
  return score;
}

}  // namespace

void SearchParams::validate() const {
  if (restarts < 1 || inner_iterations < 1 || !(initial_step > 0.0) || !(shrink_factor > 0.0) ||
      !(shrink_factor < 1.0) || !(sigma_perturb > 0.0) || !(time_budget_s > 0.0) || !(edge_tolerance > 0.0)) {
    throw std::invalid_argument("SearchParams: fields must be positive and shrink_factor < 1");
  }
}

double uncovered_area(const Configuration& cfg) {
  cfg.validate();
  const double e = cfg.edge;
  std::vector<Poly> pieces{Poly{{0.0, 0.0}, {e, 0.0}, {e, e}, {0.0, e}}};
  for (const auto& sq : cfg.squares) {
    std::vector<Poly> next;
    for (const Poly& p : pieces) subtract(p, sq, next);
    pieces = std::move(next);
    if (pieces.empty()) return 0.0;
  }
  double area = 0.0;
  for (const Poly& p : pieces) area += poly_area(p);
  return area;
}

double search_objective(const Configuration& cfg) {
  return cfg.mode == CoverMode::boundary ? uncovered_boundary_length(cfg) : uncovered_area(cfg);
}

double penalty(const Configuration& cfg, Backend backend) {
  if (cfg.mode == CoverMode::boundary) return uncovered_boundary_length(cfg);
  VerifyOptions opt;
  opt.tight = true;
  const CellThresholds thr = thresholds_for(opt);
  const double bound = uncovered_area_bound(cfg, kPenaltyDepth, thr, backend);
  if (bound == 0.0) return 0.0;
  return certified(cfg, backend) ? 0.0 : bound;
}

Configuration perturb(const Configuration& cfg, double sigma, std::uint64_t seed) {
  Gaussian g{seed};
  std::vector<double> t = pack(cfg);
  for (double& v : t) v += sigma * g.next();
  return unpack(cfg, t);
}

Configuration local_search(const Configuration& cfg0, const SearchParams& params, std::vector<double>* trace) {
  params.validate();
  cfg0.validate();
  const auto t0 = Clock::now();
  std::vector<double> theta = pack(cfg0);
  auto objective = [&](const std::vector<double>& t) {
    const Configuration c = unpack(cfg0, t);
    return c.mode == CoverMode::boundary ? boundary_score(c) : uncovered_area(c);
  };
  double f = objective(theta);
  if (f == 0.0) return cfg0;

  Gaussian rng{params.seed ^ 0x5EA7C4ULL};
  const std::size_t dim = theta.size();
  std::vector<std::size_t> order(dim);
  double step = params.initial_step;
  int evals = 0;
  int kicks = 0;
  auto eval = [&](const std::vector<double>& t) {
    ++evals;
    return objective(t);
  };

  // Exploratory moves around x: each coordinate in a seeded order, then a few
  // random unit directions (they get past kinks where no single coordinate
  // helps). Returns the improved point and value.
  auto explore = [&](std::vector<double> x, double fx, int random_dirs) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = dim; i > 1; --i) std::swap(order[i - 1], order[static_cast<std::size_t>(rng.uniform() * i)]);
    for (std::size_t k : order) {
      for (double sign : {1.0, -1.0}) {
        std::vector<double> cand = x;
        cand[k] += sign * step;
        const double fc = eval(cand);
        if (fc < fx) {
          x = std::move(cand);
          fx = fc;
          break;
        }
      }
      if (fx == 0.0) return std::pair{x, fx};
    }
    for (int r = 0; r < random_dirs && fx > 0.0; ++r) {
      std::vector<double> dir(dim);
      double norm = 0.0;
      for (double& v : dir) {
        v = rng.next();
        norm += v * v;
      }
      std::vector<double> cand = x;
      for (std::size_t k = 0; k < dim; ++k) cand[k] += step * dir[k] / std::sqrt(norm);
      const double fc = eval(cand);
      if (fc < fx) {
        x = std::move(cand);
        fx = fc;
      }
    }
    return std::pair{x, fx};
  };

  std::vector<double> best = theta;
  double best_f = f;
  while (evals < params.inner_iterations && f > 0.0) {
    auto [x, fx] = explore(theta, f, 4);
    // Before shrinking, probe many random directions: on piecewise-linear
    // objectives the descent cone at a kink can miss every coordinate axis.
    if (!(fx < f)) std::tie(x, fx) = explore(theta, f, 4 * static_cast<int>(dim));
    if (fx < f) {
      // Hooke-Jeeves: keep jumping along the last displacement while the
      // exploration around the jump point still improves.
      while (fx < f && fx > 0.0 && evals < params.inner_iterations) {
        std::vector<double> jump = x;
        for (std::size_t k = 0; k < dim; ++k) jump[k] += x[k] - theta[k];
        theta = std::move(x);
        f = fx;
        std::tie(x, fx) = explore(jump, eval(jump), 4);
      }
      if (fx < f) {
        theta = std::move(x);
        f = fx;
      }
    } else {
      step *= params.shrink_factor;
    }
    if (f < best_f) {
      best_f = f;
      best = theta;
    }
    if (trace) trace->push_back(best_f);
    if (step < kMinStep && f > 0.0) {
      if (kicks++ >= kMaxKicks) break;
      theta = best;
      for (double& v : theta) v += kKickScale * params.initial_step * rng.next();
      f = eval(theta);
      step = kKickStep * params.initial_step;
    }
    if (seconds_since(t0) > params.time_budget_s) break;
  }
  return unpack(cfg0, best);
}

SearchResult max_edge_search(int n, CoverMode mode, const SearchParams& params,
                             const std::vector<Configuration>& seeds) {
  params.validate();
  if (n < 1) throw std::invalid_argument("max_edge_search: n must be >= 1");
  const auto t0 = Clock::now();

  SearchResult result;
  // Any single square covers the unit square.
  result.config = padded(Configuration{1.0, mode, {}}, n, mode);
  result.best_edge = 1.0;

  std::vector<Configuration> warm = seeds;
  for (auto& s : warm) s = padded(s, n, mode);
  if (params.warm_start) {
    for (auto& c : library(n, mode)) warm.push_back(c);
  }
  for (const auto& c : warm) {
    if (c.edge > result.best_edge && certified(c, params.backend)) {
      result.best_edge = c.edge;
      result.config = c;
    }
  }

  double lo = result.best_edge;
  double hi = mode == CoverMode::interior ? std::sqrt(static_cast<double>(n)) : static_cast<double>(n);
  // Probe upward from the incumbent with a doubling stride until the first
  // failure, then bisect the bracket.
  double stride = kInitialStride;
  bool bracketed = false;
  int probe = 0;
  while (hi - lo > params.edge_tolerance && seconds_since(t0) < params.time_budget_s) {
    const double edge = bracketed ? 0.5 * (lo + hi) : std::min(0.5 * (lo + hi), lo + stride);
    SearchParams local = params;
    local.time_budget_s = std::max(1e-3, params.time_budget_s - seconds_since(t0));

    // Restart r: 0 = incumbent rescaled, then warm starts (perturbed after
    // their first use), then random poses.
    auto start_for = [&](int r) -> Configuration {
      const std::uint64_t s = params.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(probe) * 1000003ULL +
                              static_cast<std::uint64_t>(r);
      if (r == 0) return scaled(result.config, edge);
      const int w = r - 1;
      if (w < static_cast<int>(warm.size())) return scaled(warm[static_cast<std::size_t>(w)], edge);
      if (!warm.empty() && w < 2 * static_cast<int>(warm.size())) {
        return perturb(scaled(warm[static_cast<std::size_t>(w) % warm.size()], edge), params.sigma_perturb, s);
      }
      return random_start(n, mode, edge, s);
    };

    std::optional<Configuration> found;
    for (int base = 0; base < params.restarts && !found; base += static_cast<int>(kBatch)) {
      const std::size_t count = std::min<std::size_t>(kBatch, static_cast<std::size_t>(params.restarts - base));
      struct Attempt {
        Configuration cfg;
        double objective = 0.0;
        bool ok = false;
      };
      auto run = [&](std::size_t i) {
        const int r = base + static_cast<int>(i);
        SearchParams lp = local;
        lp.seed = params.seed + 7919ULL * static_cast<std::uint64_t>(probe) + static_cast<std::uint64_t>(r);
        Attempt a;
        a.cfg = local_search(start_for(r), lp);
        a.objective = search_objective(a.cfg);
        // Verification inside the batch runs serially; the batch itself is
        // the parallel unit.
        a.ok = a.objective == 0.0 && certified(a.cfg, Backend::serial);
        return a;
      };
      const auto attempts = map_indices(count, params.backend, run);
      for (std::size_t i = 0; i < attempts.size(); ++i) {
        result.history.push_back({base + static_cast<int>(i), edge, attempts[i].objective});
        if (attempts[i].ok && !found) found = attempts[i].cfg;
      }
      if (seconds_since(t0) > params.time_budget_s) break;
    }
    if (found) {
      lo = edge;
      result.best_edge = edge;
      result.config = *found;
      stride *= 2.0;
    } else {
      hi = edge;
      bracketed = true;
    }
    ++probe;
  }

  VerifyOptions opt;
  opt.tight = true;
  opt.backend = params.backend;
  result.certificate = verify(result.config, opt);
  return result;
}

}  // namespace sqcover
