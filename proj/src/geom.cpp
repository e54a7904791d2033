#include "sqcover/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sqcover {
namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
}

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

double normalize_angle(double radians) {
  if (!std::isfinite(radians)) throw std::invalid_argument("normalize_angle: non-finite angle");
  double r = std::fmod(radians, kHalfPi);
  if (r < 0.0) r += kHalfPi;
  // fmod + shift can round up to exactly pi/2.
  if (r >= kHalfPi) r = 0.0;
  return r + 0.0;  // -0 -> +0
}

PlacedSquare::PlacedSquare(Point center, double angle) : center_(center), angle_(normalize_angle(angle)) {
  if (!is_finite(center)) throw std::invalid_argument("PlacedSquare: non-finite center");
}

std::array<Point, 4> square_corners(const PlacedSquare& sq) {
  const double c = std::cos(sq.angle());
  const double s = std::sin(sq.angle());
  const Point u{0.5 * c, 0.5 * s};
  const Point v{-0.5 * s, 0.5 * c};
  const Point o = sq.center();
  return {o - u - v, o + u - v, o + u + v, o - u + v};
}

SquareFrame::SquareFrame(const PlacedSquare& sq)
    : center(sq.center()), cos_a(cos(GuardedScalar(sq.angle()))), sin_a(sin(GuardedScalar(sq.angle()))) {}

std::array<GuardedScalar, 4> SquareFrame::slacks(Point p) const {
  const GuardedScalar dx = GuardedScalar(p.x) - GuardedScalar(center.x);
  const GuardedScalar dy = GuardedScalar(p.y) - GuardedScalar(center.y);
  const GuardedScalar du = dx * cos_a + dy * sin_a;
  const GuardedScalar dv = dy * cos_a - dx * sin_a;
  const GuardedScalar half(0.5);
  return {half - du, half + du, half - dv, half + dv};
}

Containment classify_point(const SquareFrame& frame, Point p, double inner, double outer) {
  const auto s = frame.slacks(p);
  bool all_inside = true;
  for (const auto& v : s) {
    if (v.upper() <= outer) return Containment::outside;
    if (v.lower() < inner) all_inside = false;
  }
  return all_inside ? Containment::inside : Containment::boundary_band;
}

Containment contains_point(const PlacedSquare& sq, Point p, double margin) {
  if (!(margin >= 0.0)) throw std::invalid_argument("contains_point: margin must be >= 0");
  if (!is_finite(p)) throw std::invalid_argument("contains_point: non-finite point");
  return classify_point(SquareFrame(sq), p, margin, -margin);
}

std::optional<SideInterval> clip_segment(const SquareFrame& frame, const Segment& seg, double threshold, int rounding,
                                         int side_index) {
  const double len = distance(seg.a, seg.b);
  if (!(len > 0.0)) throw std::invalid_argument("clip_segment: degenerate segment");
  const Point dir = (1.0 / len) * (seg.b - seg.a);
  const auto s0 = frame.slacks(seg.a);
  const double cu = frame.cos_a.value();
  const double su = frame.sin_a.value();
  const double du = dir.x * cu + dir.y * su;
  const double dv = dir.y * cu - dir.x * su;
  // Slack k along the segment is s0[k] + t * rate[k].
  const std::array<double, 4> rate{-du, du, -dv, dv};

  // Error of evaluating a slack anywhere on the segment: start-point radius
  // plus the rounding of the affine extrapolation over the segment length.
  double err = 0.0;
  for (const auto& s : s0) err = std::max(err, s.radius());
  err += 8.0 * kEps * (len + std::abs(seg.a.x - frame.center.x) + std::abs(seg.a.y - frame.center.y) + 1.0);
  const double thr = threshold + static_cast<double>(rounding) * err;

  double lo = 0.0;
  double hi = len;
  for (int k = 0; k < 4; ++k) {
    const double s = s0[k].value() - thr;
    const double g = rate[k];
    if (g == 0.0) {
      if (s < 0.0) return std::nullopt;
      continue;
    }
    const double t = -s / g;
    if (g > 0.0) {
      lo = std::max(lo, t);
    } else {
      hi = std::min(hi, t);
    }
  }
  if (!(hi > lo)) return std::nullopt;
  return SideInterval{side_index, lo, hi};
}

std::optional<SideInterval> segment_square_interval(const PlacedSquare& sq, const Segment& seg, int side_index) {
  return clip_segment(SquareFrame(sq), seg, 0.0, 0, side_index);
}

}  // namespace sqcover
