// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

namespace mobiusquad {

inline constexpr double kTwoPi = 6.283185307179586476925287;

/// The Mobius change of variables between the polar angle of the unit
/// circle, theta in (0, 2*pi), and the real line:
///
///   forward(theta) = -c * cot(theta / 2)
///
/// The scale parameter c must be positive, which makes forward strictly
/// increasing with positive derivative everywhere on (0, 2*pi).
class MobiusMap {
 public:
  explicit MobiusMap(double c = 1.0);

  double c() const { return c_; }

  /// -c*cot(theta/2). Throws std::domain_error unless 0 < theta < 2*pi.
  double forward(double theta) const;

  /// Inverse of forward, continuous and increasing, with inverse(0) = pi.
  /// Computed as 2*atan2(c, -x), which stays accurate for large |x|.
  double inverse(double x) const;

  /// c / (2*sin^2(theta/2)) > 0. Throws std::domain_error outside (0, 2*pi).
  double forward_derivative(double theta) const;

  /// 2c / (c^2 + x^2); the reciprocal of forward_derivative at inverse(x).
  double inverse_derivative(double x) const;

 private:
  double c_;
};

/// Equispaced angles theta_j = 2*pi*j/n + shift, j = 0..n-1, with
/// shift in [0, 2*pi/n). With shift = 0 the node j = 0 sits at the
/// singular angle 0, where the transformed integrand is defined as 0.
class QuadratureGrid {
 public:
  QuadratureGrid(int n, double shift);

  int size() const { return n_; }
  double shift() const { return shift_; }
  double angle(int j) const { return kTwoPi * j / n_ + shift_; }
  std::vector<double> angles() const;

  /// True when node j = 0 sits exactly at theta = 0.
  bool has_endpoint_node() const { return shift_ == 0.0; }

 private:
  int n_;
  double shift_;
};

QuadratureGrid make_grid(int n, double shift = 0.0);

}  // namespace mobiusquad
