// SPDX-License-Identifier: Apache-2.0
#include "mobiusquad/quadrature.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mobiusquad/kahan.hpp"

namespace mobiusquad {

double evaluate_g(const TransformedIntegrand& ti, double theta) {
  if (theta == 0.0 || theta == kTwoPi) return 0.0;
  if (!(theta > 0.0) || !(theta < kTwoPi)) {
    throw std::domain_error("evaluate_g: theta must lie in [0, 2*pi]");
  }
  const double x = ti.map.forward(theta);
  const double value = ti.f(x) * ti.weight(x) * ti.map.forward_derivative(theta);
  if (!std::isfinite(value)) {
    std::ostringstream msg;
    msg << "evaluate_g: non-finite integrand value at x = " << x
        << " (theta = " << theta << ")";
    throw std::runtime_error(msg.str());
  }
  return value;
}

double integrate(const TransformedIntegrand& ti, int n, double shift) {
  const QuadratureGrid grid = make_grid(n, shift);
  KahanSum acc;
  for (int j = 0; j < n; ++j) acc.add(evaluate_g(ti, grid.angle(j)));
  return kTwoPi / n * acc.value();
}

NestedState::NestedState(const TransformedIntegrand& ti, int n, double shift)
    : shift_(shift) {
  const QuadratureGrid grid = make_grid(n, shift);
  values_.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) values_.push_back(evaluate_g(ti, grid.angle(j)));
}

double NestedState::estimate() const {
  KahanSum acc;
  for (double v : values_) acc.add(v);
  return kTwoPi / static_cast<double>(values_.size()) * acc.value();
}

void NestedState::refine(const TransformedIntegrand& ti) {
  const int n = node_count();
  const double new_spacing = kTwoPi / (2 * n);
  if (shift_ >= new_spacing) {
    throw std::invalid_argument(
        "NestedState::refine: shift >= pi/n, doubled grid would not nest");
  }
  std::vector<double> refined(static_cast<std::size_t>(2 * n));
  for (int j = 0; j < n; ++j) {
    refined[static_cast<std::size_t>(2 * j)] = values_[static_cast<std::size_t>(j)];
    const double theta = kTwoPi * (2 * j + 1) / (2 * n) + shift_;
    refined[static_cast<std::size_t>(2 * j + 1)] = evaluate_g(ti, theta);
  }
  values_ = std::move(refined);
}

std::optional<double> fit_loglog_slope(const std::vector<std::pair<int, double>>& points,
                                       double error_floor) {
  std::vector<std::pair<double, double>> usable;
  for (const auto& [n, err] : points) {
    if (err > error_floor) usable.emplace_back(std::log2(static_cast<double>(n)), std::log2(err));
  }
  if (usable.size() < 3) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : usable) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(usable.size());
  const double denom = m * sxx - sx * sx;
  if (denom == 0.0) return std::nullopt;
  return (m * sxy - sx * sy) / denom;
}

ConvergenceReport convergence_study(const TransformedIntegrand& ti,
                                    const std::vector<int>& ns, double reference,
                                    double shift_fraction, double error_floor) {
  if (ns.empty()) throw std::invalid_argument("convergence_study: empty node ladder");
  if (!std::isfinite(reference)) {
    throw std::invalid_argument("convergence_study: reference must be finite");
  }
  for (std::size_t i = 1; i < ns.size(); ++i) {
    if (ns[i] <= ns[i - 1]) {
      throw std::invalid_argument("convergence_study: node counts must be strictly increasing");
    }
  }

  ConvergenceReport report;
  report.reference = reference;
  report.error_floor = error_floor;
  report.fit_window = {ns.front(), ns.back()};

  if (!(shift_fraction >= 0.0) || !(shift_fraction < 1.0)) {
    throw std::invalid_argument("convergence_study: shift fraction must lie in [0, 1)");
  }

  std::vector<std::pair<int, double>> points;
  for (int n : ns) {
    const double estimate = integrate(ti, n, shift_fraction * kTwoPi / n);
    const double err = std::abs(estimate - reference);
    report.entries.push_back({n, estimate, err});
    points.emplace_back(n, err);
  }
  report.fitted_slope = fit_loglog_slope(points, error_floor);
  return report;
}

std::vector<int> default_ladder() {
  std::vector<int> ns;
  for (int k = 3; k <= 14; ++k) ns.push_back(1 << k);
  return ns;
}

}  // namespace mobiusquad
