#pragma once

#include <array>
#include <numbers>
#include <optional>

#include "sqcover/guarded.hpp"

namespace sqcover {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
double distance(Point a, Point b);
bool is_finite(Point p);

/// Reduces an angle to the canonical range [0, pi/2); a unit square is
/// invariant under quarter turns.
double normalize_angle(double radians);

/// Pose of one unit square. The angle is always kept normalized.
class PlacedSquare {
 public:
  PlacedSquare() = default;
  PlacedSquare(Point center, double angle);

  Point center() const { return center_; }
  double angle() const { return angle_; }

  friend bool operator==(const PlacedSquare&, const PlacedSquare&) = default;

 private:
  Point center_{};
  double angle_ = 0.0;
};

/// Corners in counterclockwise order, starting from center + R(-1/2, -1/2).
std::array<Point, 4> square_corners(const PlacedSquare& sq);

/// Precomputed local frame of a placed square: unit axis vectors with
/// enclosures. The four half-plane slacks of a point p are
/// 1/2 -/+ (p - c).u and 1/2 -/+ (p - c).v; each is the signed distance from
/// p to the corresponding side line, positive inside.
struct SquareFrame {
  Point center;
  GuardedScalar cos_a;
  GuardedScalar sin_a;

  explicit SquareFrame(const PlacedSquare& sq);
  std::array<GuardedScalar, 4> slacks(Point p) const;
};

enum class Containment { inside, outside, boundary_band };

/// inside: every slack is certainly >= margin; outside: some slack is
/// certainly <= -margin; otherwise boundary_band.
Containment contains_point(const PlacedSquare& sq, Point p, double margin);

/// Same rule against arbitrary signed thresholds (inside: all slacks >= inner;
/// outside: some slack <= outer). Used for tight-mode tolerances.
Containment classify_point(const SquareFrame& frame, Point p, double inner, double outer);

struct Segment {
  Point a;
  Point b;
};

struct SideInterval {
  int side_index = 0;
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  friend bool operator==(const SideInterval&, const SideInterval&) = default;
};

/// Arclength interval [lo, hi] of `seg` whose points have every slack of `sq`
/// at least `threshold`. Intervals of zero length (tangency) are empty.
/// `rounding` selects the conservative direction for float error: +1 shrinks
/// the result by the evaluation error bound, -1 grows it, 0 uses plain values.
std::optional<SideInterval> clip_segment(const SquareFrame& frame, const Segment& seg, double threshold,
                                         int rounding = 0, int side_index = 0);

/// The sub-segment of `seg` lying inside the closed square.
std::optional<SideInterval> segment_square_interval(const PlacedSquare& sq, const Segment& seg, int side_index = 0);

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;
inline constexpr double kSqrt2 = std::numbers::sqrt2;

}  // namespace sqcover
