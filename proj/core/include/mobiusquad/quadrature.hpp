// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "mobiusquad/mobius_map.hpp"
#include "mobiusquad/weights.hpp"

namespace mobiusquad {

using RealFunction = std::function<double(double)>;

/// The weighted integrand pulled back to the circle,
///   g(theta) = f(phi(theta)) * rho(phi(theta)) * phi'(theta),
/// with g(0) = g(2*pi) = 0 by definition (the limit vanishes together with
/// all derivatives up to the smoothness order of f).
struct TransformedIntegrand {
  RealFunction f;
  WeightFunction weight;
  MobiusMap map;
};

/// g(theta) for theta in [0, 2*pi]. At the endpoints the value is exactly 0
/// and neither the map nor the weight is evaluated there. A non-finite value
/// coming out of f or the weight raises std::runtime_error naming the
/// offending real-line argument.
double evaluate_g(const TransformedIntegrand& ti, double theta);

/// The transformed trapezoidal rule
///   Q_n = (2*pi/n) * sum_{j=0}^{n-1} g(2*pi*j/n + shift),
/// summed in ascending j with compensated accumulation.
double integrate(const TransformedIntegrand& ti, int n, double shift = 0.0);

/// Mutable state for nested refinement: doubling the node count reuses every
/// previously computed g value and evaluates g only at the n new midpoints.
class NestedState {
 public:
  NestedState(const TransformedIntegrand& ti, int n, double shift = 0.0);

  int node_count() const { return static_cast<int>(values_.size()); }
  double shift() const { return shift_; }

  /// Current estimate (2*pi/n) * sum of cached values.
  double estimate() const;

  /// Cached g values in ascending angle order.
  const std::vector<double>& cached_values() const { return values_; }

  /// Doubles the node count. Throws std::invalid_argument when the current
  /// shift makes the refined grid non-nested (shift >= pi/n).
  void refine(const TransformedIntegrand& ti);

 private:
  std::vector<double> values_;
  double shift_;
};

struct ConvergenceEntry {
  int n = 0;
  double estimate = 0.0;
  double abs_error = 0.0;
};

struct ConvergenceReport {
  std::vector<ConvergenceEntry> entries;
  double reference = 0.0;
  std::optional<double> fitted_slope;  // empty when fewer than 3 usable points
  std::pair<int, int> fit_window{0, 0};
  double error_floor = 1e-12;
};

/// Runs the rule over a strictly increasing ladder of node counts and fits an
/// ordinary least-squares slope of log2(error) against log2(n), using only
/// entries with error above error_floor. shift_fraction in [0, 1) places the
/// grid at shift_fraction * 2*pi/n on every rung.
ConvergenceReport convergence_study(const TransformedIntegrand& ti,
                                    const std::vector<int>& ns, double reference,
                                    double shift_fraction = 0.0,
                                    double error_floor = 1e-12);

/// OLS slope of log2(err) vs log2(n) over entries with err > floor;
/// empty when fewer than 3 points qualify.
std::optional<double> fit_loglog_slope(const std::vector<std::pair<int, double>>& points,
                                       double error_floor = 1e-12);

/// Default node ladder n = 2^k, k = 3..14.
std::vector<int> default_ladder();

}  // namespace mobiusquad
