// SPDX-License-Identifier: Apache-2.0
#include "mobiusquad/mobius_map.hpp"

#include <cmath>
#include <stdexcept>

namespace mobiusquad {

MobiusMap::MobiusMap(double c) : c_(c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw std::invalid_argument("MobiusMap: scale parameter c must be positive and finite");
  }
}

namespace {
void require_open_interval(double theta) {
  if (!(theta > 0.0) || !(theta < kTwoPi)) {
    throw std::domain_error("MobiusMap: theta must lie in the open interval (0, 2*pi)");
  }
}
}  // namespace

double MobiusMap::forward(double theta) const {
  require_open_interval(theta);
  return -c_ / std::tan(0.5 * theta);
}

double MobiusMap::inverse(double x) const {
  if (!std::isfinite(x)) {
    throw std::domain_error("MobiusMap: inverse requires a finite argument");
  }
  // 2*arccot(-x/c) with the branch that keeps the result in (0, 2*pi)
  // and monotone increasing in x.
  return 2.0 * std::atan2(c_, -x);
}

double MobiusMap::forward_derivative(double theta) const {
  require_open_interval(theta);
  const double s = std::sin(0.5 * theta);
  return c_ / (2.0 * s * s);
}

double MobiusMap::inverse_derivative(double x) const {
  if (!std::isfinite(x)) {
    throw std::domain_error("MobiusMap: inverse_derivative requires a finite argument");
  }
  return 2.0 * c_ / (c_ * c_ + x * x);
}

QuadratureGrid::QuadratureGrid(int n, double shift) : n_(n), shift_(shift) {
  if (n < 1) {
    throw std::invalid_argument("QuadratureGrid: node count must be >= 1");
  }
  if (!(shift >= 0.0) || !(shift < kTwoPi / n)) {
    throw std::invalid_argument("QuadratureGrid: shift must lie in [0, 2*pi/n)");
  }
}

std::vector<double> QuadratureGrid::angles() const {
  std::vector<double> out(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(j)] = angle(j);
  return out;
}

QuadratureGrid make_grid(int n, double shift) { return QuadratureGrid(n, shift); }

}  // namespace mobiusquad
