#pragma once

// Re-certification of the numeric facts behind the optimal coverings: the
// inequalities used for two and three squares, the boundary function G and
// the curvature of its solution curve, x-bar, and a few monotonicity facts.
// Sign claims are decided on grids of guarded evaluations; identities that are
// ill-conditioned in double precision (square roots vanishing at x = 1) are
// evaluated in 50-digit arithmetic.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sqcover/guarded.hpp"
#include "sqcover/kernels.hpp"

namespace sqcover {

enum class CheckVerdict { pass, fail, inconclusive };

std::string_view to_string(CheckVerdict v);

/// One plotted value with its enclosure radius (or its deviation from a
/// reference for checks that are not interval based).
struct CheckSample {
  double x = 0.0;
  double value = 0.0;
  double radius = 0.0;

  friend bool operator==(const CheckSample&, const CheckSample&) = default;
};

struct CheckReport {
  std::string check_id;
  CheckVerdict verdict = CheckVerdict::inconclusive;
  int grid_size = 0;
  /// Smallest certified distance from failure over the grid (>0 on pass for
  /// sign checks); for tolerance checks, tolerance minus worst deviation.
  double worst_margin = 0.0;
  std::vector<CheckSample> data;
  /// Optional second plotted series (e.g. the derivative panel).
  std::vector<CheckSample> secondary;
  std::string note;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// ((1 - lambda cos a) / sin a, (1 - lambda sin a) / cos a). Throws
/// std::domain_error unless 0 < alpha < pi/2 and lambda > 0.
std::pair<double, double> A1A2(double alpha, double lambda);

/// Both sides of lambda - A1 - A2 >= (1 - cos a)(1 - sin a) / (cos a sin a).
struct Ineq2Sides {
  double lhs = 0.0;
  double rhs = 0.0;
};
Ineq2Sides ineq2_sides(double alpha, double lambda);

CheckReport ineq2_check(int grid, Backend backend = Backend::openmp);

/// A1 increasing, A2 decreasing, both >= 0 with maximum sqrt(phi) - 1, on
/// [alpha*, pi/2 - alpha*] at lambda = sqrt(phi).
CheckReport a1a2_check(int cells, Backend backend = Backend::openmp);

/// l(sqrt phi - A1(a)) + l(sqrt phi - A2(a)) at lambda = sqrt phi.
double f_of(double alpha);
GuardedScalar f_of(const GuardedScalar& alpha);
/// f'(a) times sqrt(x1^2 - 1) sqrt(x2^2 - 1): same sign as f' and continuous
/// up to the endpoint where x2 = 1.
GuardedScalar f_derivative_numerator(const GuardedScalar& alpha);

CheckReport f_symmetry_check(int grid);
CheckReport f_endpoint_check();
CheckReport f_monotonicity_check(int grid, Backend backend = Backend::openmp);

/// l(a - l(x2)) + sqrt 2 + l(a - l(a - x2)) - a. Throws std::domain_error when
/// an argument of l leaves [1, sqrt 2] by more than 1e-12.
double G_of(double x2, double a);

/// G and its first and second partials in (x2, a), evaluated on the curve
/// parametrized by x2 and x3 = a - x2.
struct GPartials {
  GuardedScalar g, gx, ga, gxx, gxa, gaa;
};
GPartials g_partials(const GuardedScalar& x2, const GuardedScalar& x3);
/// da/dx2 = -G_x2 / G_a.
GuardedScalar implicit_first_derivative(const GPartials& p);
/// -(G_x2x2 G_a^2 - 2 G_x2a G_x2 G_a + G_aa G_x2^2) / G_a^3.
GuardedScalar implicit_second_derivative(const GPartials& p);

/// Root a of G(x2, .) in [x2 + 1, 1 + xbar] by bisection (G decreases in a).
/// Throws std::domain_error if the bracket has no sign change.
double solve_a(double x2);
/// The x with G(x, 2x) = 0, where x2 = x3 and the curve a(x2) is stationary.
double symmetric_point();

CheckReport g_root_check();
CheckReport second_derivative_check(int grid, Backend backend = Backend::openmp);
CheckReport symmetric_slope_check();

/// Root of x sqrt(x^2 - 1) = sqrt 2 - 1 on [1, sqrt 2] by bisection.
double xbar_solve();
CheckReport xbar_check(int cells = 1024);

/// l decreasing, x + l(x) decreasing, x - l(x) increasing on [1, sqrt 2].
CheckReport lshape_monotonicity_check(int cells, Backend backend = Backend::openmp);

/// Largest triangle with vertices in the unit square (boundary grid plus
/// seeded random triangles) has area 1/2.
CheckReport triangle_in_parallelogram_check(std::uint64_t seed = 1, Backend backend = Backend::openmp);

std::vector<CheckReport> run_all_checks(int grid, Backend backend = Backend::openmp);
bool aggregate_pass(const std::vector<CheckReport>& reports);

}  // namespace sqcover
