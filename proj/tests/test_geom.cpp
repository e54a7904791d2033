#include <cmath>
#include <random>

#include <stdexcept>

#include "doctest.h"
#include "oracle.hpp"
#include "sqcover/geom.hpp"
#include "sqcover/lshape.hpp"

using namespace sqcover;

TEST_CASE("normalize_angle maps into [0, pi/2) and respects quarter turns") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int i = 0; i < 10000; ++i) {
    double a = u(rng);
    double r = normalize_angle(a);
    REQUIRE(r >= 0.0);
    REQUIRE(r < kHalfPi);
    REQUIRE(normalize_angle(r) == r);
    double k = std::round((a - r) / kHalfPi);
    REQUIRE(std::abs(a - r - k * kHalfPi) < 1e-12);
  }
  CHECK(!std::signbit(normalize_angle(-0.0)));
  CHECK(normalize_angle(7.0) == doctest::Approx(7.0 - 4 * kHalfPi).epsilon(1e-15));
}

TEST_CASE("containment agrees with the long double frame oracle") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 2.0), ang(0.0, 7.0);
  int decided = 0;
  for (int i = 0; i < 20000; ++i) {
    PlacedSquare sq({u(rng), u(rng)}, ang(rng));
    Point p{u(rng), u(rng)};
    long double ext = oracle::local_extent(sq, p.x, p.y);
    Containment c = contains_point(sq, p, 1e-9);
    if (c == Containment::inside) REQUIRE(ext <= 0.5L - 1e-9L + 1e-15L);
    if (c == Containment::outside) REQUIRE(ext >= 0.5L + 1e-9L - 1e-15L);
    if (std::fabs(ext - 0.5L) > 1e-8L) {
      REQUIRE(c != Containment::boundary_band);
      ++decided;
    }
  }
  CHECK(decided > 19000);
}

TEST_CASE("square corners are unit spaced and counterclockwise") {
  PlacedSquare sq({0.3, -0.2}, 0.4);
  auto c = square_corners(sq);
  for (int i = 0; i < 4; ++i) {
    CHECK(distance(c[i], c[(i + 1) % 4]) == doctest::Approx(1.0).epsilon(1e-15));
    Point e1 = c[(i + 1) % 4] - c[i], e2 = c[(i + 2) % 4] - c[(i + 1) % 4];
    CHECK(e1.x * e2.y - e1.y * e2.x > 0.0);
    CHECK(oracle::local_extent(sq, c[i].x, c[i].y) == doctest::Approx(0.5).epsilon(1e-15));
  }
}

TEST_CASE("clip_segment matches sampled containment") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-0.5, 1.5), ang(0.0, 1.5);
  for (int t = 0; t < 500; ++t) {
    PlacedSquare sq({u(rng), u(rng)}, ang(rng));
    Segment seg{{0.0, 0.0}, {1.0, 0.0}};
    auto iv = segment_square_interval(sq, seg);
    for (int k = 0; k <= 200; ++k) {
      double s = k / 200.0;
      long double ext = oracle::local_extent(sq, s, 0.0);
      if (ext < 0.5L - 1e-12L) REQUIRE((iv && iv->lo <= s + 1e-12 && s - 1e-12 <= iv->hi));
      if (ext > 0.5L + 1e-12L) REQUIRE((!iv || s < iv->lo - 1e-13 || s > iv->hi + 1e-13));
    }
  }
}

TEST_CASE("l matches the long double formula and its endpoints") {
  CHECK(l_of(1.0) == 1.0);
  CHECK(l_of(kSqrt2) == doctest::Approx(0.0).epsilon(1e-15));
  for (int i = 0; i <= 1000; ++i) {
    double x = 1.0 + (kSqrt2 - 1.0) * i / 1000.0;
    CHECK(l_of(x) == doctest::Approx(static_cast<double>(oracle::l_ref(x))).epsilon(1e-14));
    GuardedScalar g = l_of(GuardedScalar(x));
    REQUIRE(g.contains(static_cast<double>(oracle::l_ref(x))));
  }
  CHECK_THROWS_AS(l_of(0.9), std::domain_error);
  CHECK_THROWS_AS(l_of(1.5), std::domain_error);
}

TEST_CASE("l' and l'' agree with central differences of the oracle") {
  for (int i = 1; i < 100; ++i) {
    double x = 1.01 + 0.4 * i / 100.0;
    long double h = 1e-6L;
    long double d1 = (oracle::l_ref(x + h) - oracle::l_ref(x - h)) / (2 * h);
    long double d2 = (oracle::l_ref(x + h) - 2 * oracle::l_ref(x) + oracle::l_ref(x - h)) / (h * h);
    CHECK(l_prime(x) == doctest::Approx(static_cast<double>(d1)).epsilon(1e-7));
    CHECK(l_second(x) == doctest::Approx(static_cast<double>(d2)).epsilon(1e-4));
    CHECK(l_prime(GuardedScalar(x)).contains(l_prime(x)));
  }
}

TEST_CASE("l_inverse undoes l") {
  for (int i = 0; i <= 200; ++i) {
    double x = 1.0 + (kSqrt2 - 1.0) * i / 200.0;
    CHECK(l_inverse(l_of(x)) == doctest::Approx(x).epsilon(1e-11));
  }
}

TEST_CASE("maximal embedding contains its L-shape with the long leg end at a vertex") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ux(1.0, kSqrt2), ang(0.0, 6.28);
  for (int i = 0; i < 2000; ++i) {
    double x = ux(rng), t = ang(rng);
    int hand = (i % 2) ? 1 : -1;
    Point corner{0.2, 0.3}, dir{std::cos(t), std::sin(t)};
    PlacedSquare sq = maximal_embedding(x, corner, dir, hand);
    LShape L = maximal_lshape(x, corner, dir, hand);
    CHECK(L.len_a == doctest::Approx(x));
    CHECK(L.len_b == doctest::Approx(l_of(x)));
    for (Point p : {L.corner, L.end_a(), L.end_b()}) REQUIRE(oracle::local_extent(sq, p.x, p.y) <= 0.5L + 1e-12L);
    // the long-leg end is a vertex
    bool vertex = false;
    for (Point c : square_corners(sq)) vertex = vertex || distance(c, L.end_a()) < 1e-12;
    REQUIRE(vertex);
  }
  // x = 1: two sides on the legs
  PlacedSquare unit = maximal_embedding(1.0, {0.0, 0.0}, {1.0, 0.0}, 1);
  CHECK(unit.center().x == doctest::Approx(0.5));
  CHECK(unit.center().y == doctest::Approx(0.5));
  CHECK_THROWS(maximal_embedding(0.5, {0.0, 0.0}, {1.0, 0.0}, 1));
}
