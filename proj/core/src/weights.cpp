// SPDX-License-Identifier: Apache-2.0
#include "mobiusquad/weights.hpp"

#include <cmath>
#include <stdexcept>

namespace mobiusquad {

namespace {

constexpr double kSqrtTwoPi = 2.506628274631000502415765;
constexpr double kLn2 = 0.6931471805599453094172321;

// zeta(2..12), 17 significant digits. Regenerated by the Euler-Maclaurin
// oracle in the test suite (tests/oracles.hpp).
constexpr double kZeta[] = {
    1.6449340668482264,   // zeta(2)
    1.2020569031595943,   // zeta(3)
    1.0823232337111382,   // zeta(4)
    1.0369277551433699,   // zeta(5)
    1.0173430619844491,   // zeta(6)
    1.0083492773819228,   // zeta(7)
    1.0040773561979443,   // zeta(8)
    1.0020083928260822,   // zeta(9)
    1.0009945751278181,   // zeta(10)
    1.0004941886041195,   // zeta(11)
    1.0002460865533080,   // zeta(12)
};

}  // namespace

double riemann_zeta(int s) {
  if (s < 2 || s > 12) {
    throw std::invalid_argument("riemann_zeta: tabulated only for s in 2..12");
  }
  return kZeta[s - 2];
}

WeightFunction gaussian_weight(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("gaussian_weight: sigma must be positive and finite");
  }
  WeightFunction w;
  w.kind = WeightKind::gaussian;
  w.param = sigma;
  w.evaluate = [sigma](double x) {
    const double t = x / sigma;
    return std::exp(-0.5 * t * t) / (sigma * kSqrtTwoPi);
  };
  return w;
}

WeightFunction logistic_weight(double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("logistic_weight: scale must be positive and finite");
  }
  WeightFunction w;
  w.kind = WeightKind::logistic;
  w.param = scale;
  w.evaluate = [scale](double x) {
    // e^{-x/s}/(s(1+e^{-x/s})^2) == e^{-|x|/s}/(s(1+e^{-|x|/s})^2)
    const double e = std::exp(-std::abs(x) / scale);
    const double d = 1.0 + e;
    return e / (scale * d * d);
  };
  return w;
}

WeightFunction custom_weight(std::function<double(double)> evaluate,
                             std::optional<double> monotonicity_threshold) {
  if (!evaluate) {
    throw std::invalid_argument("custom_weight: evaluator must be callable");
  }
  WeightFunction w;
  w.kind = WeightKind::custom;
  w.evaluate = std::move(evaluate);
  w.monotonicity_threshold = monotonicity_threshold;
  return w;
}

double reference_abs_power_integral(WeightKind kind, int p) {
  if (p < 1 || p > 12) {
    throw std::invalid_argument("reference_abs_power_integral: p must be in 1..12");
  }
  switch (kind) {
    case WeightKind::gaussian:
      // sqrt(2^p/pi) * Gamma((p+1)/2)
      return std::sqrt(std::exp2(static_cast<double>(p)) / M_PI) *
             std::tgamma(0.5 * (p + 1));
    case WeightKind::logistic: {
      // -2 p! Li_p(-1); Li_1(-1) = -ln 2, Li_p(-1) = -(1 - 2^{1-p}) zeta(p).
      const double eta = (p == 1) ? kLn2
                                  : (1.0 - std::exp2(1.0 - static_cast<double>(p))) *
                                        riemann_zeta(p);
      return 2.0 * std::tgamma(static_cast<double>(p) + 1.0) * eta;
    }
    case WeightKind::custom:
      break;
  }
  throw std::invalid_argument(
      "reference_abs_power_integral: closed form available only for the unit-scale "
      "gaussian and logistic weights");
}

std::string to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::gaussian: return "gaussian";
    case WeightKind::logistic: return "logistic";
    case WeightKind::custom: return "custom";
  }
  return "unknown";
}

}  // namespace mobiusquad
