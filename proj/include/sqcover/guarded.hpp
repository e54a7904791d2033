#pragma once

#include <cmath>
#include <limits>

namespace sqcover {

enum class Sign { negative, positive, unknown };

/// Midpoint-radius enclosure of a real number. Every arithmetic operation
/// widens the radius by a bound on its own rounding error, so the true value
/// of any expression built from exactly-known inputs lies in
/// [value - radius, value + radius].
class GuardedScalar {
 public:
  constexpr GuardedScalar() = default;
  constexpr GuardedScalar(double value) : value_(value) {}  // NOLINT: exact literal
  GuardedScalar(double value, double radius);

  /// Smallest enclosure of [lo, hi].
  static GuardedScalar from_interval(double lo, double hi);

  double value() const { return value_; }
  double radius() const { return radius_; }
  double lower() const;
  double upper() const;

  Sign sign() const;
  bool certainly_positive() const { return lower() > 0.0; }
  bool certainly_negative() const { return upper() < 0.0; }
  bool contains(double x) const { return lower() <= x && x <= upper(); }

  GuardedScalar operator-() const { return {-value_, radius_}; }
  GuardedScalar& operator+=(const GuardedScalar& o);
  GuardedScalar& operator-=(const GuardedScalar& o);
  GuardedScalar& operator*=(const GuardedScalar& o);
  GuardedScalar& operator/=(const GuardedScalar& o);

 private:
  double value_ = 0.0;
  double radius_ = 0.0;
};

GuardedScalar operator+(GuardedScalar a, const GuardedScalar& b);
GuardedScalar operator-(GuardedScalar a, const GuardedScalar& b);
GuardedScalar operator*(GuardedScalar a, const GuardedScalar& b);
GuardedScalar operator/(GuardedScalar a, const GuardedScalar& b);

GuardedScalar sqrt(const GuardedScalar& x);
// Square root of a quantity known a priori to be non-negative; a lower bound
// that dips below zero through widening is clamped instead of rejected.
GuardedScalar sqrt_nonneg(const GuardedScalar& x);
GuardedScalar sin(const GuardedScalar& x);
GuardedScalar cos(const GuardedScalar& x);
GuardedScalar abs(const GuardedScalar& x);
GuardedScalar square(const GuardedScalar& x);

}  // namespace sqcover
