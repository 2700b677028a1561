// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "mobiusquad/mobius_map.hpp"
#include "mobiusquad/weights.hpp"

namespace mobiusquad {

/// Product weight rho(x) = prod_k rho_k(x_k).
struct ProductWeight {
  std::vector<WeightFunction> components;

  int dimension() const { return static_cast<int>(components.size()); }
  double operator()(const std::vector<double>& x) const;
};

/// Rank-1 lattice rule: n points theta^(i) = 2*pi*frac(i*z/n) with a
/// generating vector z whose entries are coprime with n (so every
/// one-dimensional projection is the full equispaced grid).
struct LatticeRule {
  int n = 0;
  std::vector<int> z;

  LatticeRule(int n, std::vector<int> z);
  int dimension() const { return static_cast<int>(z.size()); }
};

/// Applies the one-dimensional map coordinatewise. Every theta_k must lie in
/// (0, 2*pi); boundary coordinates raise std::domain_error (the integration
/// routine zeroes such points before ever calling this).
std::vector<double> componentwise_forward(const std::vector<MobiusMap>& maps,
                                          const std::vector<double>& thetas);

/// All n lattice points in [0, 2*pi)^d; point i = 0 is the all-zeros corner.
std::vector<std::vector<double>> lattice_points(const LatticeRule& rule);

/// Korobov-form generating vector z = (1, a, a^2, ...) mod n with a chosen by
/// exhaustive search to minimize the P_alpha worst-case criterion, computed
/// through the closed-form Bernoulli-polynomial kernel. Ties break toward the
/// smallest a. alpha in {1, 2, 3}.
LatticeRule korobov_search(int n, int d, int alpha = 2);

/// P_alpha criterion value of a rule (exposed for the brute-force oracle).
double korobov_criterion(const LatticeRule& rule, int alpha);

using MultiFunction = std::function<double(const std::vector<double>&)>;

/// (2*pi)^d / n * sum_i G(theta^(i)) with
///   G(theta) = f(phi(theta)) * prod_k rho_k(x_k) * phi'_{c_k}(theta_k),
/// defined as exactly 0 whenever any coordinate of theta^(i) is 0.
double integrate_lattice(const MultiFunction& f, const ProductWeight& weights,
                         const std::vector<MobiusMap>& maps, const LatticeRule& rule);

}  // namespace mobiusquad
