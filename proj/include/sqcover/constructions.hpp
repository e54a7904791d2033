#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "sqcover/geom.hpp"

namespace sqcover {

enum class CoverMode { interior, boundary };

std::string_view to_string(CoverMode mode);

/// Target square [0, edge]^2 (vertex v1 at the origin, counterclockwise
/// labelling) together with the covering unit squares.
struct Configuration {
  double edge = 1.0;
  CoverMode mode = CoverMode::interior;
  std::vector<PlacedSquare> squares;

  /// Throws std::invalid_argument unless edge > 0 and squares is nonempty.
  void validate() const;
  /// Vertex v_{i+1} (i = 0..3), counterclockwise from the origin.
  Point vertex(int i) const;
  /// Side E_{i+1} = [v_{i+1}, v_{i+2}].
  Segment side(int i) const;
};

/// Leg bookkeeping of a boundary covering. Vertex i hosts one square whose
/// trace is an L-shape with legs x[i] and l(x[i]); side i carries y[i] (leg
/// touching vertex i), side_squares[i] diagonal traces of length sqrt 2, then
/// z[i] (leg touching vertex i+1).
struct LegAssignment {
  std::array<double, 4> x{};
  std::array<bool, 4> long_leg_forward{};  ///< vertex i puts its long leg on side i (else on side i-1)
  std::array<double, 4> y{};
  std::array<double, 4> z{};
  std::array<int, 4> side_squares{};
  double edge = 0.0;

  /// Side length implied by the legs: y + sqrt2 * k + z.
  double side_sum(int i) const;
  /// Max deviation of any side sum from edge, and of {z[i-1], y[i]} from {x[i], l(x[i])}.
  double residual() const;
};

/// Optimal covering of the whole square for n in 1..5.
Configuration construct_interior(int n);

/// Optimal boundary covering for n = 2, 3 and n >= 4 with n = 0, 1 (mod 4).
Configuration construct_boundary(int n);

/// Leg parameters used by construct_boundary(n) for n >= 4.
LegAssignment boundary_legs(int n);

/// Configuration realizing a leg assignment (vertex squares via maximal
/// embeddings, side squares diagonal).
Configuration realize_boundary(const LegAssignment& legs);

/// S_bd(n) for n >= 4, n = 0, 1 (mod 4): 2 + k sqrt 2 or 1 + xbar + k sqrt 2.
double sbd_closed_form(int n);

/// Known S(n); throws std::invalid_argument for n outside 1..5.
double s_closed_form(int n);

}  // namespace sqcover
