// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <string>

namespace mobiusquad {

enum class WeightKind { gaussian, logistic, custom };

/// A pointwise-evaluable weight density on the real line. The quadrature
/// only ever needs values of the weight at the transformed nodes, so a
/// plain evaluator is the whole contract. Built-ins are the Gaussian and
/// logistic densities; custom weights are accepted as-is.
///
/// The convergence guarantees of the transformed trapezoidal rule hold for
/// strictly positive Schwartz weights that are monotone outside some
/// interval [-K, K]. The library cannot verify that from point values and
/// does not try; supplying a weight outside that class is allowed but the
/// convergence rates are then unspecified (heavy tails in particular can
/// degrade arbitrarily).
struct WeightFunction {
  std::function<double(double)> evaluate;
  WeightKind kind = WeightKind::custom;
  double param = 0.0;  // sigma for gaussian, scale for logistic
  std::optional<double> monotonicity_threshold;  // informational only

  double operator()(double x) const { return evaluate(x); }
};

/// Gaussian density exp(-x^2/(2 sigma^2)) / (sigma sqrt(2 pi)).
WeightFunction gaussian_weight(double sigma = 1.0);

/// Logistic density e^{-x/s} / (s (1 + e^{-x/s})^2), evaluated through
/// e^{-|x|/s} so it cannot overflow for large |x|.
WeightFunction logistic_weight(double scale = 1.0);

WeightFunction custom_weight(std::function<double(double)> evaluate,
                             std::optional<double> monotonicity_threshold = std::nullopt);

/// Closed-form integral of |x|^p against the unit-scale built-in weights:
///   gaussian(1): sqrt(2^p / pi) * Gamma((p+1)/2)
///   logistic(1): -2 p! Li_p(-1), with Li_p(-1) = -(1 - 2^{1-p}) zeta(p)
///                for p >= 2 and Li_1(-1) = -ln 2.
/// Supported for p in 1..12; anything else throws std::invalid_argument.
double reference_abs_power_integral(WeightKind kind, int p);

std::string to_string(WeightKind kind);

/// zeta(s) for integer s in 2..12, to full double precision. The values are
/// frozen constants; tests regenerate them with an Euler-Maclaurin series.
double riemann_zeta(int s);

}  // namespace mobiusquad
