// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "mobiusquad/mobius_map.hpp"

using namespace mobiusquad;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("forward map spot values") {
  CHECK(MobiusMap(1.0).forward(kPi) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(MobiusMap(1.0).forward(kPi / 2) == doctest::Approx(-1.0));
  CHECK(MobiusMap(2.0).forward(3 * kPi / 2) == doctest::Approx(2.0));
}

TEST_CASE("forward map domain errors") {
  const MobiusMap map(1.0);
  CHECK_THROWS_AS(map.forward(0.0), std::domain_error);
  CHECK_THROWS_AS(map.forward(kTwoPi), std::domain_error);
  CHECK_THROWS_AS(map.forward(-0.1), std::domain_error);
  CHECK_THROWS_AS(MobiusMap(0.0), std::invalid_argument);
  CHECK_THROWS_AS(MobiusMap(-1.0), std::invalid_argument);
}

TEST_CASE("inverse map spot values and round trip at 1e6") {
  const MobiusMap map(1.0);
  CHECK(map.inverse(0.0) == doctest::Approx(kPi));
  CHECK(map.inverse(-1.0) == doctest::Approx(kPi / 2));
  const double theta = map.inverse(1e6);
  CHECK(theta > kPi);
  CHECK(theta < kTwoPi);
  CHECK(std::abs(map.forward(theta) - 1e6) < 1e-9 * 1e6);
}

TEST_CASE("derivative spot values") {
  CHECK(MobiusMap(1.0).forward_derivative(kPi) == doctest::Approx(0.5));
  CHECK(MobiusMap(2.0).forward_derivative(kPi) == doctest::Approx(1.0));
  CHECK(MobiusMap(1.0).forward_derivative(kPi / 3) == doctest::Approx(2.0));
  CHECK(MobiusMap(1.0).inverse_derivative(0.0) == doctest::Approx(2.0));
  CHECK(MobiusMap(1.0).inverse_derivative(1.0) == doctest::Approx(1.0));
  CHECK(MobiusMap(3.0).inverse_derivative(4.0) == doctest::Approx(6.0 / 25.0));
}

TEST_CASE("round trip over log-uniform magnitudes") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> log_mag(-6.0, 6.0);
  std::bernoulli_distribution sign(0.5);
  for (double c : {0.5, 1.0, 2.0}) {
    const MobiusMap map(c);
    for (int i = 0; i < 2000; ++i) {
      const double x = (sign(rng) ? 1.0 : -1.0) * std::pow(10.0, log_mag(rng));
      const double back = map.forward(map.inverse(x));
      CHECK(std::abs(back - x) <= 1e-9 * (1.0 + std::abs(x)));
    }
  }
}

TEST_CASE("derivative reciprocity away from endpoints") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> angle(1e-3, kTwoPi - 1e-3);
  for (double c : {0.5, 1.0, 2.0}) {
    const MobiusMap map(c);
    for (int i = 0; i < 2000; ++i) {
      const double theta = angle(rng);
      const double prod = map.forward_derivative(theta) * map.inverse_derivative(map.forward(theta));
      CHECK(std::abs(prod - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("forward is strictly increasing on a sampled grid") {
  const MobiusMap map(1.3);
  double prev = map.forward(1e-4);
  for (int j = 1; j <= 5000; ++j) {
    const double theta = 1e-4 + (kTwoPi - 2e-4) * j / 5000.0;
    const double x = map.forward(theta);
    CHECK(x > prev);
    prev = x;
  }
}

TEST_CASE("central finite difference converges at second order") {
  const MobiusMap map(1.0);
  const double exact = map.forward_derivative(kPi);
  const auto fd = [&](double h) {
    return (map.forward(kPi + h) - map.forward(kPi - h)) / (2.0 * h);
  };
  const double err3 = std::abs(fd(1e-3) - exact);
  const double err4 = std::abs(fd(1e-4) - exact);
  const double ratio = err3 / err4;
  CHECK(ratio > 50.0);
  CHECK(ratio < 200.0);
}

TEST_CASE("grid construction") {
  const QuadratureGrid g4 = make_grid(4, 0.0);
  CHECK(g4.angle(0) == 0.0);
  CHECK(g4.angle(1) == doctest::Approx(kPi / 2));
  CHECK(g4.angle(2) == doctest::Approx(kPi));
  CHECK(g4.angle(3) == doctest::Approx(3 * kPi / 2));
  CHECK(g4.has_endpoint_node());

  const QuadratureGrid g2 = make_grid(2, kPi / 2);
  CHECK(g2.angle(0) == doctest::Approx(kPi / 2));
  CHECK(g2.angle(1) == doctest::Approx(3 * kPi / 2));
  CHECK_FALSE(g2.has_endpoint_node());

  const QuadratureGrid g1 = make_grid(1, 0.0);
  CHECK(g1.size() == 1);
  CHECK(g1.angle(0) == 0.0);

  CHECK_THROWS_AS(make_grid(4, kTwoPi / 4), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(4, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(0, 0.0), std::invalid_argument);
}

TEST_CASE("grid angles are strictly increasing and inside [0, 2*pi)") {
  const QuadratureGrid g = make_grid(257, 0.01);
  double prev = -1.0;
  for (int j = 0; j < g.size(); ++j) {
    const double a = g.angle(j);
    CHECK(a >= 0.0);
    CHECK(a < kTwoPi);
    CHECK(a > prev);
    prev = a;
  }
}
