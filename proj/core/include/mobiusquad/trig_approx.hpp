// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <string>
#include <vector>

#include "mobiusquad/mobius_map.hpp"
#include "mobiusquad/quadrature.hpp"
#include "mobiusquad/weights.hpp"

namespace mobiusquad {

using Complex = std::complex<double>;

/// Centered discrete Fourier coefficients of n samples at theta_j = 2*pi*j/n,
///   coeff(k) = (1/n) * sum_j samples_j * e^{-i k theta_j},
/// for k = floor(-(n-1)/2) .. floor((n-1)/2) (exactly n frequencies for both
/// parities; the window is one longer on the negative side for even n).
class FourierCoefficients {
 public:
  FourierCoefficients() = default;
  FourierCoefficients(std::vector<Complex> coeffs, int n);

  int sample_count() const { return n_; }
  int k_min() const { return -((n_ - 1) / 2) - ((n_ % 2 == 0) ? 1 : 0); }
  int k_max() const { return (n_ - 1) / 2; }

  Complex at(int k) const;  // throws std::out_of_range outside the window

  /// Coefficients listed from most negative to most positive frequency.
  const std::vector<Complex>& values() const { return coeffs_; }

 private:
  std::vector<Complex> coeffs_;
  int n_ = 0;
};

/// Forward DFT with 1/n normalization. Uses an iterative radix-2 FFT when n
/// is a power of two and direct summation otherwise.
FourierCoefficients dft(const std::vector<Complex>& samples);

/// Reference O(n^2) direct summation; kept public as the independent check
/// for the fast path.
FourierCoefficients dft_direct(const std::vector<Complex>& samples);

/// The trigonometric interpolant B_n of
///   g_p(theta) = f(phi(theta)) * (rho(phi(theta)) * phi'(theta))^{1/p},
/// together with the (weight, map, p) context needed to evaluate the
/// pulled-back approximation A_n f on the real line.
class TrigInterpolant {
 public:
  TrigInterpolant(FourierCoefficients coefficients, double p, WeightFunction weight,
                  MobiusMap map);

  const FourierCoefficients& coefficients() const { return coeffs_; }
  int sample_count() const { return coeffs_.sample_count(); }
  double exponent() const { return p_; }
  const WeightFunction& weight() const { return weight_; }
  const MobiusMap& map() const { return map_; }

  /// (B_n f)(theta): the finite Fourier sum, evaluated by Horner recursion in
  /// e^{i theta} over the shifted index range. For even n the unpaired most
  /// negative frequency is evaluated as a cosine mode, which leaves every
  /// node value unchanged and keeps the interpolant of real samples real.
  Complex eval_periodic(double theta) const;

  /// (A_n f)(x) = (B_n f)(phi^{-1}(x)) * (rho(x) * (x^2+c^2)/(2c))^{-1/p}.
  /// Throws std::runtime_error when the imaginary residue of the periodic
  /// value exceeds 1e-9 relative (the interpolant then does not represent a
  /// real-valued function to working accuracy).
  double eval_real(double x) const;

  /// JSON object {n, p, c, weight_kind, coeff_re[], coeff_im[]} with
  /// frequencies listed from most negative to most positive.
  std::string to_json() const;

 private:
  FourierCoefficients coeffs_;
  double p_;
  WeightFunction weight_;
  MobiusMap map_;
};

/// Samples g_p at theta_j = 2*pi*j/n (with g_p(0) = 0) and interpolates.
TrigInterpolant build_interpolant(const RealFunction& f, const WeightFunction& weight,
                                  const MobiusMap& map, int n, double p);

/// g_p(theta), with the endpoint convention g_p(0) = g_p(2*pi) = 0.
double evaluate_g_p(const RealFunction& f, const WeightFunction& weight,
                    const MobiusMap& map, double p, double theta);

/// || f - A_n f ||_{L^p_rho} approximated by the plain trapezoidal rule with
/// n_ref nodes applied to |g_p(theta) - (B_n f)(theta)|^p on [0, 2*pi].
/// Requires n_ref >= 8 * interp.sample_count().
double lp_error(const RealFunction& f, const TrigInterpolant& interp, int n_ref);

}  // namespace mobiusquad
