#pragma once

#include "sqcover/geom.hpp"
#include "sqcover/guarded.hpp"

namespace sqcover {

/// Two orthogonal legs sharing the corner point.
struct LShape {
  Point corner;
  Point dir_a;
  double len_a = 0.0;
  Point dir_b;
  double len_b = 0.0;

  Point end_a() const { return corner + len_a * dir_a; }
  Point end_b() const { return corner + len_b * dir_b; }
};

inline constexpr double kLShapeDomainTol = 1e-12;

/// Longest short leg of an L-shape with long leg x that fits in a unit square:
/// l(x) = x - x*sqrt(x^2 - 1), defined on [1, sqrt 2].
double l_of(double x);
GuardedScalar l_of(const GuardedScalar& x);

/// l'(x) = (sqrt(x^2-1) - 2x^2 + 1) / sqrt(x^2-1). The numerator is returned
/// separately since the denominator vanishes at x = 1.
GuardedScalar l_prime_numerator(const GuardedScalar& x);
GuardedScalar l_prime(const GuardedScalar& x);
/// l''(x) = x (3 - 2x^2) / (x^2-1)^{3/2}.
GuardedScalar l_second(const GuardedScalar& x);
double l_prime(double x);
double l_second(double x);

/// Unique x in [1, sqrt 2] with l(x) = y, to 1e-12 or better.
double l_inverse(double y);

/// Pose of the unit square in which the L-shape with corner `corner`, long
/// leg x along `dir_long` and short leg l(x) is maximally embedded. The short
/// leg points along dir_long rotated by +90 degrees for handedness +1 and by
/// -90 degrees for -1. The long-leg endpoint is a vertex of the result.
/// At x = 1 the square with two sides on the legs is returned.
PlacedSquare maximal_embedding(double x, Point corner, Point dir_long, int handedness);

/// The L-shape realized by maximal_embedding with the same arguments.
LShape maximal_lshape(double x, Point corner, Point dir_long, int handedness);

}  // namespace sqcover
