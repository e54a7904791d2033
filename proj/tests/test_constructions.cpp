#include <algorithm>
#include <cmath>

#include <stdexcept>

#include "doctest.h"
#include "oracle.hpp"
#include "sqcover/constants.hpp"
#include "sqcover/constructions.hpp"
#include "sqcover/lshape.hpp"
#include "sqcover/paper_checks.hpp"

using namespace sqcover;

TEST_CASE("constants match the 40-digit values") {
  const Constants& k = constants();
  CHECK(k.phi == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-15));
  CHECK(std::abs(k.sqrt_phi - oracle::kSqrtPhi) < 1e-15);
  CHECK(std::abs(k.alpha_star - oracle::kAlphaStar) < 1e-15);
  CHECK(std::abs(k.xbar - oracle::kXbar) < 1e-14);
  CHECK(k.sbd5 == k.xbar + 1.0);
  CHECK(std::abs(std::cos(k.alpha_star) * k.sqrt_phi - 1.0) < 1e-12);
  CHECK(std::abs(xbar_closed_form() - oracle::kXbar) < 1e-15);
  CHECK(std::abs(xbar_solve() - oracle::kXbar) < 1e-12);
}

TEST_CASE("interior constructions have the known edges") {
  const double expect[] = {1.0, 1.0, oracle::kSqrtPhi, 2.0, 2.0};
  for (int n = 1; n <= 5; ++n) {
    Configuration cfg = construct_interior(n);
    CHECK(cfg.squares.size() == static_cast<std::size_t>(n));
    CHECK(cfg.mode == CoverMode::interior);
    CHECK(cfg.edge == doctest::Approx(expect[n - 1]).epsilon(1e-15));
    CHECK(s_closed_form(n) == cfg.edge);
  }
  CHECK_THROWS_AS(construct_interior(6), std::invalid_argument);
  CHECK_THROWS_AS(construct_interior(0), std::invalid_argument);
}

TEST_CASE("three-square optimum: two tilted squares at +-alpha, one axis aligned") {
  Configuration cfg = construct_interior(3);
  int tilted = 0, axis = 0;
  for (const auto& sq : cfg.squares) {
    double a = sq.angle();
    if (std::abs(a) < 1e-12) ++axis;
    if (std::abs(a - oracle::kAlphaStar) < 1e-12 || std::abs(a - (kHalfPi - oracle::kAlphaStar)) < 1e-12) ++tilted;
  }
  CHECK(axis == 1);
  CHECK(tilted == 2);
  // the tilted squares have a vertex at the origin corner
  int at_origin = 0;
  for (const auto& sq : cfg.squares) {
    for (Point c : square_corners(sq)) at_origin += std::hypot(c.x, c.y) < 1e-12;
  }
  CHECK(at_origin == 2);
}

TEST_CASE("boundary constructions and the closed form") {
  CHECK(construct_boundary(2).edge == 1.0);
  CHECK(construct_boundary(3).edge == doctest::Approx(oracle::kSqrtPhi).epsilon(1e-15));
  CHECK(sbd_closed_form(4) == 2.0);
  CHECK(std::abs(sbd_closed_form(5) - oracle::kSbd5) < 1e-14);
  CHECK(std::abs(sbd_closed_form(9) - oracle::kSbd9) < 1e-14);
  CHECK(std::abs(sbd_closed_form(13) - oracle::kSbd13) < 1e-14);
  for (int n : {4, 5, 8, 9, 12, 13, 16, 17}) {
    Configuration cfg = construct_boundary(n);
    CHECK(cfg.squares.size() == static_cast<std::size_t>(n));
    CHECK(cfg.edge == doctest::Approx(sbd_closed_form(n)).epsilon(1e-15));
    LegAssignment legs = boundary_legs(n);
    CHECK(legs.residual() < 1e-12);
  }
  for (int n : {6, 7, 10, 11}) CHECK_THROWS_AS(construct_boundary(n), std::invalid_argument);
}

TEST_CASE("the recurrence adds sqrt 2 per four squares") {
  for (int n : {4, 5, 8, 9}) {
    CHECK(std::abs(sbd_closed_form(n + 4) - sbd_closed_form(n) - kSqrt2) < 1e-12);
    CHECK(std::abs(construct_boundary(n + 4).edge - construct_boundary(n).edge - kSqrt2) < 1e-12);
  }
}

TEST_CASE("five-square boundary legs follow (sqrt2, xbar, 1, xbar)") {
  LegAssignment legs = boundary_legs(5);
  std::array<double, 4> x = legs.x;
  std::sort(x.begin(), x.end());
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(oracle::kXbar));
  CHECK(x[2] == doctest::Approx(oracle::kXbar));
  CHECK(x[3] == doctest::Approx(kSqrt2));
  // side sums
  CHECK(kSqrt2 + l_of(kSqrt2) + l_of(oracle::kXbar) == doctest::Approx(oracle::kSbd5).epsilon(1e-12));
  CHECK(kSqrt2 + l_of(oracle::kXbar) == doctest::Approx(oracle::kSbd5).epsilon(1e-12));
}
