#include "sqcover/guarded.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqcover {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::denorm_min();
constexpr double kInf = std::numeric_limits<double>::infinity();

double up(double x) { return std::nextafter(x, kInf); }
double down(double x) { return std::nextafter(x, -kInf); }

// Radius after an operation whose result is `value` and whose propagated
// (exact-arithmetic) radius is `r`. Adds one ulp-scale term for the rounding
// of `value` and inflates `r` for the rounding of its own computation.
double widen(double value, double r) {
  return up(r * (1.0 + 4.0 * kEps) + kEps * std::abs(value) + kTiny);
}

}  // namespace

GuardedScalar::GuardedScalar(double value, double radius) : value_(value), radius_(radius) {
  if (!(radius >= 0.0)) throw std::invalid_argument("GuardedScalar: negative radius");
}

GuardedScalar GuardedScalar::from_interval(double lo, double hi) {
  if (!(lo <= hi)) throw std::invalid_argument("GuardedScalar: empty interval");
  const double mid = lo + 0.5 * (hi - lo);
  const double r = std::max(mid - lo, hi - mid);
  return {mid, up(r * (1.0 + 2.0 * kEps) + kTiny)};
}

double GuardedScalar::lower() const { return down(value_ - radius_); }
double GuardedScalar::upper() const { return up(value_ + radius_); }

Sign GuardedScalar::sign() const {
  if (lower() > 0.0) return Sign::positive;
  if (upper() < 0.0) return Sign::negative;
  return Sign::unknown;
}

GuardedScalar& GuardedScalar::operator+=(const GuardedScalar& o) {
  value_ += o.value_;
  radius_ = widen(value_, radius_ + o.radius_);
  return *this;
}

GuardedScalar& GuardedScalar::operator-=(const GuardedScalar& o) {
  value_ -= o.value_;
  radius_ = widen(value_, radius_ + o.radius_);
  return *this;
}

GuardedScalar& GuardedScalar::operator*=(const GuardedScalar& o) {
  const double r = std::abs(value_) * o.radius_ + std::abs(o.value_) * radius_ + radius_ * o.radius_;
  value_ *= o.value_;
  radius_ = widen(value_, r);
  return *this;
}

GuardedScalar& GuardedScalar::operator/=(const GuardedScalar& o) {
  const double lo = o.lower();
  const double hi = o.upper();
  if (lo <= 0.0 && hi >= 0.0) throw std::domain_error("GuardedScalar: division by an enclosure of zero");
  // 1/x is monotone on an interval excluding zero.
  const double a = 1.0 / hi;
  const double b = 1.0 / lo;
  GuardedScalar inv = from_interval(std::min(a, b), std::max(a, b));
  inv.radius_ = widen(inv.value_, inv.radius_);
  return *this *= inv;
}

GuardedScalar operator+(GuardedScalar a, const GuardedScalar& b) { return a += b; }
GuardedScalar operator-(GuardedScalar a, const GuardedScalar& b) { return a -= b; }
GuardedScalar operator*(GuardedScalar a, const GuardedScalar& b) { return a *= b; }
GuardedScalar operator/(GuardedScalar a, const GuardedScalar& b) { return a /= b; }

GuardedScalar sqrt(const GuardedScalar& x) {
  const double lo = x.lower();
  if (lo < 0.0) throw std::domain_error("GuardedScalar: sqrt of a possibly negative enclosure");
  return sqrt_nonneg(x);
}

GuardedScalar sqrt_nonneg(const GuardedScalar& x) {
  const double lo = std::max(0.0, x.lower());
  const double hi = std::max(0.0, x.upper());
  // sqrt is correctly rounded; one ulp outward on each end covers it.
  return GuardedScalar::from_interval(std::max(0.0, down(std::sqrt(lo))), up(std::sqrt(hi)));
}

GuardedScalar sin(const GuardedScalar& x) {
  const double s = std::sin(x.value());
  const double r = x.radius();
  const double spread = std::min(r, std::abs(std::cos(x.value())) * r + 0.5 * r * r);
  // libm sin/cos are accurate to well under 2 ulp; the extra kEps absorbs that.
  return {s, widen(s, spread + 2.0 * kEps * std::abs(s) + kEps * kEps)};
}

GuardedScalar cos(const GuardedScalar& x) {
  const double c = std::cos(x.value());
  const double r = x.radius();
  const double spread = std::min(r, std::abs(std::sin(x.value())) * r + 0.5 * r * r);
  return {c, widen(c, spread + 2.0 * kEps * std::abs(c) + kEps * kEps)};
}

GuardedScalar abs(const GuardedScalar& x) {
  if (x.lower() >= 0.0) return x;
  if (x.upper() <= 0.0) return -x;
  return GuardedScalar::from_interval(0.0, std::max(-x.lower(), x.upper()));
}

GuardedScalar square(const GuardedScalar& x) {
  const GuardedScalar a = abs(x);
  const double lo = a.lower();
  const double hi = a.upper();
  return GuardedScalar::from_interval(down(std::max(0.0, lo) * std::max(0.0, lo)), up(hi * hi));
}

}  // namespace sqcover
