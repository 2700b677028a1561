// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "mobiusquad/quadrature.hpp"
#include "mobiusquad/weights.hpp"

namespace mobiusquad {

/// Gauss-Hermite rule rescaled to the standard normal density: nodes are
/// symmetric about 0 and the weights sum to 1.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  int size() const { return static_cast<int>(nodes.size()); }
};

/// Builds the n-point rule from the Jacobi tridiagonal matrix of the
/// probabilists' Hermite recurrence (diagonal 0, off-diagonal sqrt(k)) with
/// an implicit-shift QL eigensolver; squared first eigenvector components
/// give the weights. Valid for 1 <= n <= 4096.
GaussRule gauss_hermite_rule(int n);

/// sum_i w_i f(x_i) for the n-point rule above.
double gauss_hermite_integrate(const RealFunction& f, int n);

/// Experimental variant of the transformed trapezoidal rule with the Mobius
/// map replaced by psi(theta) = 2*artanh(-cos(theta/2)), the inverse of the
/// single-exponential transform tanh(x/2) composed with a smooth map of the
/// circle onto (-1, 1). psi'(theta) = 1/sin(theta/2); endpoint values are 0.
double se_transform_integrate(const RealFunction& f, const WeightFunction& weight,
                              int n, double shift = 0.0);

/// The SE-variant map and its inverse (exposed for round-trip checks).
double se_map(double theta);
double se_map_inverse(double x);
double se_map_derivative(double theta);

}  // namespace mobiusquad
