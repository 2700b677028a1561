// SPDX-License-Identifier: Apache-2.0
#include "mobiusquad/multivariate.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mobiusquad/kahan.hpp"

namespace mobiusquad {

namespace {

// Kernel K_alpha(u) = 1 + sum_{h != 0} e^{2*pi*i*h*u} / |h|^{2*alpha},
// via the Bernoulli polynomials B_{2*alpha} on [0, 1).
double bernoulli_kernel(double u, int alpha) {
  switch (alpha) {
    case 1: {
      const double b2 = u * u - u + 1.0 / 6.0;
      return 1.0 + 2.0 * M_PI * M_PI * b2;
    }
    case 2: {
      const double u2 = u * u;
      const double b4 = u2 * u2 - 2.0 * u2 * u + u2 - 1.0 / 30.0;
      const double pi4 = M_PI * M_PI * M_PI * M_PI;
      return 1.0 - (2.0 / 3.0) * pi4 * b4;
    }
    case 3: {
      const double u2 = u * u;
      const double u4 = u2 * u2;
      const double b6 = u4 * u2 - 3.0 * u4 * u + 2.5 * u4 - 0.5 * u2 + 1.0 / 42.0;
      const double pi2 = M_PI * M_PI;
      return 1.0 + (4.0 / 45.0) * pi2 * pi2 * pi2 * b6;
    }
    default:
      throw std::invalid_argument("korobov criterion: alpha must be 1, 2, or 3");
  }
}

}  // namespace

double ProductWeight::operator()(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != dimension()) {
    throw std::invalid_argument("ProductWeight: dimension mismatch");
  }
  double prod = 1.0;
  for (std::size_t k = 0; k < components.size(); ++k) prod *= components[k](x[k]);
  return prod;
}

LatticeRule::LatticeRule(int n_, std::vector<int> z_) : n(n_), z(std::move(z_)) {
  if (n < 1) throw std::invalid_argument("LatticeRule: n must be >= 1");
  if (z.empty()) throw std::invalid_argument("LatticeRule: empty generating vector");
  for (int zk : z) {
    if (zk < 1 || (n > 1 && zk >= n)) {
      throw std::invalid_argument("LatticeRule: components must lie in {1, ..., n-1}");
    }
    if (std::gcd(zk, n) != 1) {
      throw std::invalid_argument("LatticeRule: gcd(z_k, n) must be 1");
    }
  }
}

std::vector<double> componentwise_forward(const std::vector<MobiusMap>& maps,
                                          const std::vector<double>& thetas) {
  if (maps.size() != thetas.size()) {
    throw std::invalid_argument("componentwise_forward: dimension mismatch");
  }
  std::vector<double> x(thetas.size());
  for (std::size_t k = 0; k < maps.size(); ++k) x[k] = maps[k].forward(thetas[k]);
  return x;
}

std::vector<std::vector<double>> lattice_points(const LatticeRule& rule) {
  const int d = rule.dimension();
  std::vector<std::vector<double>> points(static_cast<std::size_t>(rule.n));
  for (int i = 0; i < rule.n; ++i) {
    std::vector<double> p(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
      const long long r = (static_cast<long long>(i) * rule.z[static_cast<std::size_t>(k)]) % rule.n;
      p[static_cast<std::size_t>(k)] = kTwoPi * static_cast<double>(r) / rule.n;
    }
    points[static_cast<std::size_t>(i)] = std::move(p);
  }
  return points;
}

double korobov_criterion(const LatticeRule& rule, int alpha) {
  const int n = rule.n;
  const int d = rule.dimension();
  KahanSum acc;
  for (int i = 0; i < n; ++i) {
    double prod = 1.0;
    for (int k = 0; k < d; ++k) {
      const long long r = (static_cast<long long>(i) * rule.z[static_cast<std::size_t>(k)]) % n;
      prod *= bernoulli_kernel(static_cast<double>(r) / n, alpha);
    }
    acc.add(prod);
  }
  return acc.value() / n - 1.0;
}

LatticeRule korobov_search(int n, int d, int alpha) {
  if (n < 2) throw std::invalid_argument("korobov_search: n must be >= 2");
  if (d < 1) throw std::invalid_argument("korobov_search: d must be >= 1");
  if (d == 1) return LatticeRule(n, {1});

  // Kernel values on the one-dimensional grid i/n; each candidate rule only
  // permutes indices into this table.
  std::vector<double> kernel(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    kernel[static_cast<std::size_t>(i)] = bernoulli_kernel(static_cast<double>(i) / n, alpha);
  }

  int best_a = -1;
  double best_value = 0.0;
  for (int a = 1; a < n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    KahanSum acc;
    for (int i = 0; i < n; ++i) {
      double prod = kernel[static_cast<std::size_t>(i)];
      long long idx = i;
      for (int k = 1; k < d; ++k) {
        idx = (idx * a) % n;
        prod *= kernel[static_cast<std::size_t>(idx)];
      }
      acc.add(prod);
    }
    const double value = acc.value() / n - 1.0;
    if (best_a < 0 || value < best_value) {
      best_a = a;
      best_value = value;
    }
  }
  if (best_a < 0) {
    throw std::invalid_argument("korobov_search: no admissible multiplier a");
  }

  std::vector<int> z(static_cast<std::size_t>(d));
  long long power = 1;
  for (int k = 0; k < d; ++k) {
    z[static_cast<std::size_t>(k)] = static_cast<int>(power);
    power = (power * best_a) % n;
  }
  return LatticeRule(n, std::move(z));
}

double integrate_lattice(const MultiFunction& f, const ProductWeight& weights,
                         const std::vector<MobiusMap>& maps, const LatticeRule& rule) {
  const int d = rule.dimension();
  if (weights.dimension() != d || static_cast<int>(maps.size()) != d) {
    throw std::invalid_argument("integrate_lattice: dimension mismatch");
  }

  KahanSum acc;
  std::vector<double> x(static_cast<std::size_t>(d));
  for (int i = 0; i < rule.n; ++i) {
    double jacobian_weight = 1.0;
    bool on_boundary = false;
    for (int k = 0; k < d; ++k) {
      const long long r = (static_cast<long long>(i) * rule.z[static_cast<std::size_t>(k)]) % rule.n;
      if (r == 0) {
        on_boundary = true;  // transformed integrand vanishes there
        break;
      }
      const double theta = kTwoPi * static_cast<double>(r) / rule.n;
      const auto& map = maps[static_cast<std::size_t>(k)];
      x[static_cast<std::size_t>(k)] = map.forward(theta);
      jacobian_weight *= weights.components[static_cast<std::size_t>(k)](x[static_cast<std::size_t>(k)]) *
                         map.forward_derivative(theta);
    }
    if (on_boundary) continue;
    const double value = f(x) * jacobian_weight;
    if (!std::isfinite(value)) {
      std::ostringstream msg;
      msg << "integrate_lattice: non-finite integrand value at lattice point " << i;
      throw std::runtime_error(msg.str());
    }
    acc.add(value);
  }
  return std::pow(kTwoPi, d) / rule.n * acc.value();
}

}  // namespace mobiusquad
