#include "sqcover/lshape.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sqcover {
namespace {

double check_domain(double x) {
  if (!std::isfinite(x) || x < 1.0 - kLShapeDomainTol || x > kSqrt2 + kLShapeDomainTol) {
    throw std::domain_error("l(x): argument " + std::to_string(x) + " outside [1, sqrt 2]");
  }
  return std::clamp(x, 1.0, kSqrt2);
}

Point rotate_ccw(Point p) { return {-p.y, p.x}; }
Point rotate_cw(Point p) { return {p.y, -p.x}; }

}  // namespace

double l_of(double x) {
  x = check_domain(x);
  return x - x * std::sqrt(std::max(0.0, (x - 1.0) * (x + 1.0)));
}

namespace {
// x^2 - 1 as (x - 1)(x + 1): exact-ish relative error when x is close to 1.
GuardedScalar leg_radicand(const GuardedScalar& x) { return (x - GuardedScalar(1.0)) * (x + GuardedScalar(1.0)); }
}  // namespace

GuardedScalar l_of(const GuardedScalar& x) {
  const GuardedScalar r = sqrt_nonneg(leg_radicand(x));
  return x - x * r;
}

GuardedScalar l_prime_numerator(const GuardedScalar& x) {
  const GuardedScalar r = sqrt_nonneg(leg_radicand(x));
  return r - GuardedScalar(2.0) * x * x + GuardedScalar(1.0);
}

GuardedScalar l_prime(const GuardedScalar& x) {
  const GuardedScalar r = sqrt_nonneg(leg_radicand(x));
  return l_prime_numerator(x) / r;
}

GuardedScalar l_second(const GuardedScalar& x) {
  const GuardedScalar r2 = leg_radicand(x);
  const GuardedScalar r = sqrt_nonneg(r2);
  return x * (GuardedScalar(3.0) - GuardedScalar(2.0) * x * x) / (r2 * r);
}

double l_prime(double x) {
  const double r = std::sqrt((x - 1.0) * (x + 1.0));
  return (r - 2.0 * x * x + 1.0) / r;
}

double l_second(double x) {
  const double r2 = (x - 1.0) * (x + 1.0);
  return x * (3.0 - 2.0 * x * x) / (r2 * std::sqrt(r2));
}

double l_inverse(double y) {
  if (!std::isfinite(y) || y < -kLShapeDomainTol || y > 1.0 + kLShapeDomainTol) {
    throw std::domain_error("l_inverse: argument " + std::to_string(y) + " outside [0, 1]");
  }
  y = std::clamp(y, 0.0, 1.0);
  if (y == 1.0) return 1.0;
  if (y == 0.0) return kSqrt2;
  // l is strictly decreasing: l(lo) >= y >= l(hi).
  double lo = 1.0;
  double hi = kSqrt2;
  while (hi - lo > 1e-15) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (l_of(mid) > y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

LShape maximal_lshape(double x, Point corner, Point dir_long, int handedness) {
  x = check_domain(x);
  if (handedness != 1 && handedness != -1) throw std::invalid_argument("maximal_lshape: handedness must be +1 or -1");
  const double n = std::hypot(dir_long.x, dir_long.y);
  if (std::abs(n - 1.0) > 1e-9) throw std::invalid_argument("maximal_lshape: dir_long must be a unit vector");
  const Point d = (1.0 / n) * dir_long;
  const Point s = handedness > 0 ? rotate_ccw(d) : rotate_cw(d);
  return LShape{corner, d, x, s, l_of(x)};
}

PlacedSquare maximal_embedding(double x, Point corner, Point dir_long, int handedness) {
  const LShape shape = maximal_lshape(x, corner, dir_long, handedness);
  x = shape.len_a;
  // Local frame [0,1]^2 for handedness -1: the corner sits on the bottom side
  // at (s, 0), the long leg runs to the vertex (0, 1) and the short leg to the
  // right side. Handedness +1 is the mirror image x -> 1 - x.
  const double s = std::sqrt(std::max(0.0, x * x - 1.0));
  Point local_corner{s, 0.0};
  Point local_dir{-s / x, 1.0 / x};
  if (handedness > 0) {
    local_corner = {1.0 - s, 0.0};
    local_dir = {s / x, 1.0 / x};
  }
  // Rotation taking local_dir onto the world long-leg direction.
  const double theta = std::atan2(shape.dir_a.y, shape.dir_a.x) - std::atan2(local_dir.y, local_dir.x);
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  const Point offset = Point{0.5, 0.5} - local_corner;
  const Point rotated{c * offset.x - sn * offset.y, sn * offset.x + c * offset.y};
  return PlacedSquare(corner + rotated, theta);
}

}  // namespace sqcover
