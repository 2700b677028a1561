// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "mobiusquad/trig_approx.hpp"

using namespace mobiusquad;

namespace {
constexpr double kPi = 3.14159265358979323846;

std::vector<Complex> random_samples(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> s(static_cast<std::size_t>(n));
  for (auto& v : s) v = Complex(u(rng), u(rng));
  return s;
}

RealFunction abs_cubed() {
  return [](double x) { return std::abs(x) * x * x; };
}
}  // namespace

TEST_CASE("frequency window has exactly n entries for both parities") {
  for (int n : {1, 2, 3, 4, 5, 8, 9, 64, 65}) {
    const FourierCoefficients c = dft(std::vector<Complex>(static_cast<std::size_t>(n), 0.0));
    CHECK(c.k_max() - c.k_min() + 1 == n);
    CHECK(c.k_max() == (n - 1) / 2);
    CHECK_THROWS_AS(c.at(c.k_min() - 1), std::out_of_range);
    CHECK_THROWS_AS(c.at(c.k_max() + 1), std::out_of_range);
  }
}

TEST_CASE("dft of constant samples") {
  const Complex v(2.5, -0.5);
  const FourierCoefficients c = dft(std::vector<Complex>(16, v));
  CHECK(std::abs(c.at(0) - v) <= 1e-13);
  for (int k = c.k_min(); k <= c.k_max(); ++k) {
    if (k != 0) CHECK(std::abs(c.at(k)) <= 1e-13);
  }
}

TEST_CASE("dft of a pure mode") {
  const int n = 12;
  std::vector<Complex> s(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) s[static_cast<std::size_t>(j)] = std::polar(1.0, kTwoPi * j / n);
  const FourierCoefficients c = dft(s);
  CHECK(std::abs(c.at(1) - 1.0) <= 1e-13);
  for (int k = c.k_min(); k <= c.k_max(); ++k) {
    if (k != 1) CHECK(std::abs(c.at(k)) <= 1e-13);
  }
}

TEST_CASE("fast path matches direct summation") {
  for (int n : {2, 4, 8, 64, 256, 1024}) {
    const std::vector<Complex> s = random_samples(n, 1000 + static_cast<std::uint64_t>(n));
    const FourierCoefficients fast = dft(s);
    const FourierCoefficients direct = dft_direct(s);
    for (int k = fast.k_min(); k <= fast.k_max(); ++k) {
      CHECK(std::abs(fast.at(k) - direct.at(k)) <= 1e-12);
    }
  }
}

TEST_CASE("Parseval identity under the 1/n normalization") {
  for (int n : {7, 64, 513, 2048}) {
    const std::vector<Complex> s = random_samples(n, 7 + static_cast<std::uint64_t>(n));
    const FourierCoefficients c = dft(s);
    double lhs = 0.0, rhs = 0.0;
    for (const Complex& v : s) lhs += std::norm(v);
    lhs /= n;
    for (const Complex& v : c.values()) rhs += std::norm(v);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * lhs);
  }
}

TEST_CASE("real samples give conjugate-symmetric coefficients") {
  const int n = 33;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> s(static_cast<std::size_t>(n));
  for (auto& v : s) v = Complex(u(rng), 0.0);
  const FourierCoefficients c = dft(s);
  for (int k = 1; k <= c.k_max(); ++k) {
    CHECK(std::abs(c.at(-k) - std::conj(c.at(k))) <= 1e-12);
  }
}

TEST_CASE("dft round trip through eval_periodic") {
  for (int n : {16, 256, 16384}) {
    const std::vector<Complex> s = random_samples(n, 2 + static_cast<std::uint64_t>(n));
    const TrigInterpolant interp(dft(s), 1.0, gaussian_weight(1.0), MobiusMap(1.0));
    std::mt19937_64 pick(99);
    std::uniform_int_distribution<int> idx(0, n - 1);
    for (int t = 0; t < 64; ++t) {
      const int j = idx(pick);
      CHECK(std::abs(interp.eval_periodic(kTwoPi * j / n) - s[static_cast<std::size_t>(j)]) <= 1e-10);
    }
  }
}

TEST_CASE("build_interpolant of the zero function") {
  const TrigInterpolant interp = build_interpolant([](double) { return 0.0; },
                                                   gaussian_weight(1.0), MobiusMap(1.0), 64, 1.0);
  for (const Complex& v : interp.coefficients().values()) CHECK(std::abs(v) == 0.0);
  CHECK(interp.eval_real(0.3) == 0.0);
  CHECK(std::abs(interp.eval_periodic(1.7)) == 0.0);
}

TEST_CASE("interpolation property at the construction nodes") {
  const WeightFunction w = gaussian_weight(1.0);
  const MobiusMap map(1.0);
  const RealFunction f = abs_cubed();
  const int n = 256;
  const TrigInterpolant interp = build_interpolant(f, w, map, n, 1.0);
  for (int j = 0; j < n; ++j) {
    const double theta = kTwoPi * j / n;
    const double sample = evaluate_g_p(f, w, map, 1.0, theta);
    CHECK(std::abs(interp.eval_periodic(theta) - sample) < 1e-10);
  }
}

TEST_CASE("eval_real reproduces f at pulled-back interior nodes") {
  const WeightFunction w = gaussian_weight(1.0);
  const MobiusMap map(1.0);
  const RealFunction f = abs_cubed();
  const int n = 512;
  const TrigInterpolant interp = build_interpolant(f, w, map, n, 1.0);
  for (int j : {n / 4, n / 3, n / 2, 2 * n / 3, 3 * n / 4}) {
    const double x = map.forward(kTwoPi * j / n);
    CHECK(std::abs(interp.eval_real(x) - f(x)) <= 1e-8 * (std::abs(f(x)) + 1e-3));
  }
}

TEST_CASE("pointwise error improves from n=128 to n=512") {
  const RealFunction f = abs_cubed();
  const TrigInterpolant coarse = build_interpolant(f, gaussian_weight(1.0), MobiusMap(1.0), 128, 1.0);
  const TrigInterpolant fine = build_interpolant(f, gaussian_weight(1.0), MobiusMap(1.0), 512, 1.0);
  const double x = 0.7;
  CHECK(std::abs(fine.eval_real(x) - f(x)) < std::abs(coarse.eval_real(x) - f(x)));
}

TEST_CASE("coefficient stability under doubling") {
  const RealFunction f = abs_cubed();
  const TrigInterpolant a = build_interpolant(f, gaussian_weight(1.0), MobiusMap(1.0), 256, 1.0);
  const TrigInterpolant b = build_interpolant(f, gaussian_weight(1.0), MobiusMap(1.0), 512, 1.0);
  // Aliasing bounds the change of a low frequency by the spectral tail mass.
  double tail = 0.0;
  for (int k = b.coefficients().k_min(); k <= b.coefficients().k_max(); ++k) {
    if (std::abs(k) >= 96) tail += std::abs(b.coefficients().at(k));
  }
  double max_change = 0.0;
  for (int k = -64; k <= 64; ++k) {
    max_change = std::max(max_change, std::abs(a.coefficients().at(k) - b.coefficients().at(k)));
  }
  CHECK(max_change <= 2.0 * tail + 1e-11);
}

TEST_CASE("build_interpolant is linear in f") {
  const WeightFunction w = gaussian_weight(1.0);
  const MobiusMap map(1.0);
  const RealFunction f = [](double x) { return std::cos(x) * std::exp(-0.3 * x * x); };
  const RealFunction g = [](double x) { return x * std::exp(-x * x); };
  const double a = 1.7, b = -0.4;
  const RealFunction combo = [&](double x) { return a * f(x) + b * g(x); };
  const int n = 64;
  const TrigInterpolant ic = build_interpolant(combo, w, map, n, 1.0);
  const TrigInterpolant iff = build_interpolant(f, w, map, n, 1.0);
  const TrigInterpolant ig = build_interpolant(g, w, map, n, 1.0);
  for (int k = ic.coefficients().k_min(); k <= ic.coefficients().k_max(); ++k) {
    const Complex want = a * iff.coefficients().at(k) + b * ig.coefficients().at(k);
    CHECK(std::abs(ic.coefficients().at(k) - want) <=
          1e-13 * (1.0 + std::abs(want)));
  }
}

TEST_CASE("lp_error basics and approximation rate") {
  const RealFunction zero = [](double) { return 0.0; };
  const TrigInterpolant iz = build_interpolant(zero, gaussian_weight(1.0), MobiusMap(1.0), 32, 1.0);
  CHECK(lp_error(zero, iz, 4096) == 0.0);
  CHECK_THROWS_AS(lp_error(zero, iz, 100), std::invalid_argument);

  const RealFunction f = abs_cubed();
  std::vector<std::pair<int, double>> points;
  for (int n = 16; n <= 1024; n *= 2) {
    const TrigInterpolant interp = build_interpolant(f, gaussian_weight(1.0), MobiusMap(1.0), n, 1.0);
    points.emplace_back(n, lp_error(f, interp, std::max(8 * n, 4096)));
  }
  const auto slope = fit_loglog_slope(points);
  REQUIRE(slope.has_value());
  CHECK(*slope <= -3.0 + 0.5);
}

TEST_CASE("L1 rate upper bound also holds for |x|") {
  const RealFunction f = [](double x) { return std::abs(x); };
  std::vector<std::pair<int, double>> points;
  for (int n = 16; n <= 1024; n *= 2) {
    const TrigInterpolant interp = build_interpolant(f, gaussian_weight(1.0), MobiusMap(1.0), n, 1.0);
    points.emplace_back(n, lp_error(f, interp, std::max(8 * n, 4096)));
  }
  const auto slope = fit_loglog_slope(points);
  REQUIRE(slope.has_value());
  CHECK(*slope <= -1.0 + 0.5);
}

TEST_CASE("json export lists frequencies from most negative to most positive") {
  const TrigInterpolant interp = build_interpolant(abs_cubed(), gaussian_weight(1.0),
                                                   MobiusMap(2.0), 32, 1.0);
  const nlohmann::json j = nlohmann::json::parse(interp.to_json());
  CHECK(j["n"] == 32);
  CHECK(j["p"] == 1.0);
  CHECK(j["c"] == 2.0);
  CHECK(j["weight_kind"] == "gaussian");
  REQUIRE(j["coeff_re"].size() == 32);
  REQUIRE(j["coeff_im"].size() == 32);
  const auto& c = interp.coefficients();
  CHECK(j["coeff_re"][0].get<double>() == doctest::Approx(c.at(c.k_min()).real()));
  CHECK(j["coeff_re"][31].get<double>() == doctest::Approx(c.at(c.k_max()).real()));
}
