#include "sqcover/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sqcover/constants.hpp"
#include "sqcover/lshape.hpp"

namespace sqcover {

double xbar_closed_form() { return 0.5 * kSqrt2 * std::sqrt(std::sqrt(13.0 - 8.0 * kSqrt2) + 1.0); }

const Constants& constants() {
  static const Constants c = [] {
    Constants k{};
    k.phi = (1.0 + std::sqrt(5.0)) / 2.0;
    k.sqrt_phi = std::sqrt(k.phi);
    k.alpha_star = std::acos(1.0 / k.sqrt_phi);
    k.xbar = xbar_closed_form();
    k.sbd5 = 1.0 + k.xbar;
    return k;
  }();
  return c;
}

std::string_view to_string(CoverMode mode) { return mode == CoverMode::interior ? "interior" : "boundary"; }

void Configuration::validate() const {
  if (!(edge > 0.0) || !std::isfinite(edge)) throw std::invalid_argument("Configuration: edge must be positive");
  if (squares.empty()) throw std::invalid_argument("Configuration: no squares");
}

Point Configuration::vertex(int i) const {
  switch (((i % 4) + 4) % 4) {
    case 0: return {0.0, 0.0};
    case 1: return {edge, 0.0};
    case 2: return {edge, edge};
    default: return {0.0, edge};
  }
}

Segment Configuration::side(int i) const { return {vertex(i), vertex(i + 1)}; }

double LegAssignment::side_sum(int i) const { return y[i] + kSqrt2 * side_squares[i] + z[i]; }

double LegAssignment::residual() const {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    worst = std::max(worst, std::abs(side_sum(i) - edge));
    const double a = z[(i + 3) % 4];
    const double b = y[i];
    const double lx = l_of(x[i]);
    const double d1 = std::max(std::abs(a - x[i]), std::abs(b - lx));
    const double d2 = std::max(std::abs(a - lx), std::abs(b - x[i]));
    worst = std::max(worst, std::min(d1, d2));
  }
  return worst;
}

namespace {

void require_boundary_n(int n) {
  if (n < 4 || (n % 4 != 0 && n % 4 != 1)) {
    throw std::invalid_argument("unsupported n = " + std::to_string(n) +
                                " (boundary optimum known only for n = 2, 3 and n = 0, 1 mod 4)");
  }
}

Configuration three_square_optimum(CoverMode mode) {
  const Constants& k = constants();
  Configuration cfg;
  cfg.edge = k.sqrt_phi;
  cfg.mode = mode;
  const double e = cfg.edge;
  // Two tilted squares with maximally embedded L-shapes (sqrt phi, sqrt phi - 1):
  // one along E1 anchored at v2, its mirror along E4 anchored at v4. Both have
  // a vertex at v1.
  cfg.squares.push_back(maximal_embedding(k.sqrt_phi, cfg.vertex(1), {-1.0, 0.0}, -1));
  cfg.squares.push_back(maximal_embedding(k.sqrt_phi, cfg.vertex(3), {0.0, -1.0}, +1));
  // Axis-parallel square in the corner v3.
  cfg.squares.emplace_back(Point{e - 0.5, e - 0.5}, 0.0);
  return cfg;
}

Configuration quadrants(double edge) {
  Configuration cfg;
  cfg.edge = edge;
  cfg.mode = CoverMode::interior;
  cfg.squares = {PlacedSquare({0.5, 0.5}, 0.0), PlacedSquare({edge - 0.5, 0.5}, 0.0),
                 PlacedSquare({edge - 0.5, edge - 0.5}, 0.0), PlacedSquare({0.5, edge - 0.5}, 0.0)};
  return cfg;
}

}  // namespace

Configuration construct_interior(int n) {
  Configuration cfg;
  switch (n) {
    case 1:
    case 2:
      cfg.edge = 1.0;
      cfg.squares.assign(static_cast<std::size_t>(n), PlacedSquare({0.5, 0.5}, 0.0));
      return cfg;
    case 3:
      return three_square_optimum(CoverMode::interior);
    case 4:
      return quadrants(2.0);
    case 5:
      cfg = quadrants(2.0);
      cfg.squares.push_back(cfg.squares.front());
      return cfg;
    default:
      throw std::invalid_argument("construct_interior: unsupported n = " + std::to_string(n) + " (known for 1..5)");
  }
}

LegAssignment boundary_legs(int n) {
  require_boundary_n(n);
  const Constants& k = constants();
  LegAssignment legs;
  const int extra = (n - 4) / 4;
  if (n % 4 == 0) {
    legs.x = {1.0, 1.0, 1.0, 1.0};
    legs.long_leg_forward = {true, true, true, true};
    legs.side_squares = {extra, extra, extra, extra};
  } else {
    // v1: xbar (long leg on E4), v2: sqrt 2 (diagonal on E2), v3: xbar (long
    // leg on E3), v4: axis-parallel. E1 carries the extra side square.
    legs.x = {k.xbar, kSqrt2, k.xbar, 1.0};
    legs.long_leg_forward = {false, true, true, false};
    legs.side_squares = {extra + 1, extra, extra, extra};
  }
  for (int i = 0; i < 4; ++i) {
    const int j = (i + 1) % 4;
    legs.y[i] = legs.long_leg_forward[i] ? legs.x[i] : l_of(legs.x[i]);
    legs.z[i] = legs.long_leg_forward[j] ? l_of(legs.x[j]) : legs.x[j];
  }
  legs.edge = sbd_closed_form(n);
  return legs;
}

Configuration realize_boundary(const LegAssignment& legs) {
  Configuration cfg;
  cfg.edge = legs.edge;
  cfg.mode = CoverMode::boundary;
  for (int i = 0; i < 4; ++i) {
    const Point v = cfg.vertex(i);
    const Point fwd = (1.0 / cfg.edge) * (cfg.vertex(i + 1) - v);
    const Point back = (1.0 / cfg.edge) * (cfg.vertex(i + 3) - v);
    const Point dir_long = legs.long_leg_forward[i] ? fwd : back;
    const Point dir_short = legs.long_leg_forward[i] ? back : fwd;
    // +1 when the short leg is the long leg turned counterclockwise.
    const int hand = (-dir_long.y * dir_short.x + dir_long.x * dir_short.y) > 0.0 ? 1 : -1;
    cfg.squares.push_back(maximal_embedding(legs.x[i], v, dir_long, hand));
  }
  for (int i = 0; i < 4; ++i) {
    const Point v = cfg.vertex(i);
    const Point fwd = (1.0 / cfg.edge) * (cfg.vertex(i + 1) - v);
    for (int j = 0; j < legs.side_squares[i]; ++j) {
      const double t = legs.y[i] + (j + 0.5) * kSqrt2;
      cfg.squares.emplace_back(v + t * fwd, kPi / 4.0);
    }
  }
  return cfg;
}

Configuration construct_boundary(int n) {
  if (n == 2) {
    Configuration cfg = construct_interior(2);
    cfg.mode = CoverMode::boundary;
    return cfg;
  }
  if (n == 3) return three_square_optimum(CoverMode::boundary);
  return realize_boundary(boundary_legs(n));
}

double sbd_closed_form(int n) {
  require_boundary_n(n);
  const int k = (n - 4) / 4;
  const double base = n % 4 == 0 ? 2.0 : constants().sbd5;
  return base + k * kSqrt2;
}

double s_closed_form(int n) {
  switch (n) {
    case 1:
    case 2: return 1.0;
    case 3: return constants().sqrt_phi;
    case 4:
    case 5: return 2.0;
    default: throw std::invalid_argument("s_closed_form: S(n) known only for n = 1..5");
  }
}

}  // namespace sqcover
