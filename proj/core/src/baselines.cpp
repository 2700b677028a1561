// SPDX-License-Identifier: Apache-2.0
#include "mobiusquad/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mobiusquad/kahan.hpp"

namespace mobiusquad {

namespace {

// Implicit-shift QL iteration on a symmetric tridiagonal matrix, tracking
// only the first row of the accumulated orthogonal transform (all that is
// needed for Gauss weights). d = diagonal, e = subdiagonal (e[i] couples
// rows i and i+1), z starts as (1, 0, ..., 0).
void ql_first_row(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  e.push_back(0.0);
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-15 * dd) break;
      }
      if (m != l) {
        if (iter++ == 64) {
          throw std::runtime_error("gauss_hermite_rule: QL iteration failed to converge");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  e.pop_back();
}

}  // namespace

GaussRule gauss_hermite_rule(int n) {
  if (n < 1 || n > 4096) {
    throw std::invalid_argument("gauss_hermite_rule: n must lie in 1..4096");
  }
  // Probabilists' Hermite Jacobi matrix: zero diagonal, off-diagonal sqrt(k).
  std::vector<double> d(static_cast<std::size_t>(n), 0.0);
  std::vector<double> e(static_cast<std::size_t>(n > 1 ? n - 1 : 0));
  for (int k = 1; k < n; ++k) e[static_cast<std::size_t>(k - 1)] = std::sqrt(static_cast<double>(k));
  std::vector<double> z(static_cast<std::size_t>(n), 0.0);
  z[0] = 1.0;

  ql_first_row(d, e, z);

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return d[static_cast<std::size_t>(a)] < d[static_cast<std::size_t>(b)]; });

  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int j = order[static_cast<std::size_t>(i)];
    rule.nodes[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(j)];
    const double v = z[static_cast<std::size_t>(j)];
    rule.weights[static_cast<std::size_t>(i)] = v * v;  // total mass of the density is 1
  }

  // Enforce the exact symmetry of the rule about 0.
  for (int i = 0; i < n / 2; ++i) {
    const int j = n - 1 - i;
    const double x = 0.5 * (rule.nodes[static_cast<std::size_t>(j)] - rule.nodes[static_cast<std::size_t>(i)]);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(j)] = x;
    const double w = 0.5 * (rule.weights[static_cast<std::size_t>(i)] + rule.weights[static_cast<std::size_t>(j)]);
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(j)] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

double gauss_hermite_integrate(const RealFunction& f, int n) {
  const GaussRule rule = gauss_hermite_rule(n);
  KahanSum acc;
  for (int i = 0; i < n; ++i) {
    acc.add(rule.weights[static_cast<std::size_t>(i)] * f(rule.nodes[static_cast<std::size_t>(i)]));
  }
  return acc.value();
}

double se_map(double theta) {
  if (!(theta > 0.0) || !(theta < kTwoPi)) {
    throw std::domain_error("se_map: theta must lie in (0, 2*pi)");
  }
  return 2.0 * std::atanh(-std::cos(0.5 * theta));
}

double se_map_inverse(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("se_map_inverse: finite argument required");
  }
  return 2.0 * std::acos(-std::tanh(0.5 * x));
}

double se_map_derivative(double theta) {
  if (!(theta > 0.0) || !(theta < kTwoPi)) {
    throw std::domain_error("se_map_derivative: theta must lie in (0, 2*pi)");
  }
  return 1.0 / std::sin(0.5 * theta);
}

double se_transform_integrate(const RealFunction& f, const WeightFunction& weight,
                              int n, double shift) {
  const QuadratureGrid grid = make_grid(n, shift);
  KahanSum acc;
  for (int j = 0; j < n; ++j) {
    const double theta = grid.angle(j);
    if (theta == 0.0 || theta == kTwoPi) continue;  // transformed integrand is 0
    const double x = se_map(theta);
    const double value = f(x) * weight(x) * se_map_derivative(theta);
    if (!std::isfinite(value)) {
      throw std::runtime_error("se_transform_integrate: non-finite integrand value");
    }
    acc.add(value);
  }
  return kTwoPi / n * acc.value();
}

}  // namespace mobiusquad
