#pragma once

namespace sqcover {

/// Closed-form constants of the optimal coverings.
struct Constants {
  double phi;         ///< golden ratio (1 + sqrt 5) / 2
  double sqrt_phi;    ///< S(3), the optimal 3-square edge
  double alpha_star;  ///< arccos(1 / sqrt phi), tilt of the two rotated squares for n = 3
  double xbar;        ///< root of x + 1 = l(x) + sqrt 2 on [1, sqrt 2]
  double sbd5;        ///< 1 + xbar, the optimal 5-square boundary edge
};

const Constants& constants();

/// (1/2) sqrt 2 sqrt(sqrt(13 - 8 sqrt 2) + 1)
double xbar_closed_form();

}  // namespace sqcover
