#pragma once

// Reference implementations used only by the tests. They share no code with
// the library: plain long double geometry, brute-force sampling, and values
// frozen from a 40-digit mpmath evaluation of the closed forms.

#include <cmath>
#include <cstdint>
#include <random>

#include "sqcover/constructions.hpp"

namespace oracle {

// 40-digit values of the closed forms, rounded to double.
inline constexpr double kXbar = 1.072047776661898869681952901759852678199;
inline constexpr double kSbd5 = 2.072047776661898869681952901759852678199;
inline constexpr double kSbd9 = 3.486261339034993918483641625969550756769;
inline constexpr double kSbd13 = 4.900474901408088967285330350179248835338;
inline constexpr double kSqrtPhi = 1.272019649514068964252422461737491491716;
inline constexpr double kAlphaStar = 0.6662394324925152551040048959777927206675;
inline constexpr double kSymmetricPoint = 1.023680907674583174186025146948308448295;

/// Sup-norm distance of p from the center in the square's own frame; the
/// point is in the closed square iff this is <= 1/2.
inline long double local_extent(const sqcover::PlacedSquare& sq, long double px, long double py) {
  long double c = std::cos(static_cast<long double>(sq.angle()));
  long double s = std::sin(static_cast<long double>(sq.angle()));
  long double dx = px - sq.center().x, dy = py - sq.center().y;
  long double u = c * dx + s * dy, v = -s * dx + c * dy;
  return std::fmax(std::fabs(u), std::fabs(v));
}

/// True when p is outside every square by more than `slack`.
inline bool outside_all(const sqcover::Configuration& cfg, double px, double py, long double slack = 0.0L) {
  for (const auto& sq : cfg.squares) {
    if (local_extent(sq, px, py) <= 0.5L + slack) return false;
  }
  return true;
}

inline long double l_ref(long double x) { return x - x * std::sqrt((x - 1) * (x + 1)); }

/// Brute-force uncovered area of [0, edge]^2 on an m x m midpoint grid.
inline double grid_uncovered_area(const sqcover::Configuration& cfg, int m) {
  long double h = static_cast<long double>(cfg.edge) / m;
  long long miss = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (outside_all(cfg, static_cast<double>((i + 0.5L) * h), static_cast<double>((j + 0.5L) * h))) ++miss;
    }
  }
  return static_cast<double>(miss * h * h);
}

/// Random configuration with n squares centered in the target.
inline sqcover::Configuration random_config(std::mt19937_64& rng, int n, double edge, sqcover::CoverMode mode) {
  std::uniform_real_distribution<double> pos(0.0, edge), ang(0.0, 6.283185307179586);
  sqcover::Configuration cfg;
  cfg.edge = edge;
  cfg.mode = mode;
  for (int i = 0; i < n; ++i) cfg.squares.emplace_back(sqcover::Point{pos(rng), pos(rng)}, ang(rng));
  return cfg;
}

/// Copy with the target enlarged to `edge`, poses unchanged.
inline sqcover::Configuration with_edge(sqcover::Configuration cfg, double edge) {
  cfg.edge = edge;
  return cfg;
}

}  // namespace oracle
