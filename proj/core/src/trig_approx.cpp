// SPDX-License-Identifier: Apache-2.0
#include "mobiusquad/trig_approx.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mobiusquad/kahan.hpp"

#include <json.hpp>

namespace mobiusquad {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 Cooley-Tukey, unnormalized forward transform
// X[m] = sum_j x[j] e^{-2*pi*i*j*m/n}.
void fft_radix2(std::vector<Complex>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -kTwoPi / static_cast<double>(len);
    const Complex wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      Complex w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const Complex u = a[i + j];
        const Complex v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

std::vector<Complex> center_and_normalize(const std::vector<Complex>& bins) {
  const int n = static_cast<int>(bins.size());
  const int k_lo = -((n - 1) / 2) - ((n % 2 == 0) ? 1 : 0);
  std::vector<Complex> out(static_cast<std::size_t>(n));
  for (int k = k_lo; k <= (n - 1) / 2; ++k) {
    const int bin = ((k % n) + n) % n;
    out[static_cast<std::size_t>(k - k_lo)] =
        bins[static_cast<std::size_t>(bin)] / static_cast<double>(n);
  }
  return out;
}

}  // namespace

FourierCoefficients::FourierCoefficients(std::vector<Complex> coeffs, int n)
    : coeffs_(std::move(coeffs)), n_(n) {
  if (n < 1 || static_cast<int>(coeffs_.size()) != n) {
    throw std::invalid_argument("FourierCoefficients: need exactly n coefficients");
  }
}

Complex FourierCoefficients::at(int k) const {
  if (k < k_min() || k > k_max()) {
    throw std::out_of_range("FourierCoefficients: frequency outside the centered window");
  }
  return coeffs_[static_cast<std::size_t>(k - k_min())];
}

FourierCoefficients dft(const std::vector<Complex>& samples) {
  if (samples.empty()) throw std::invalid_argument("dft: need at least one sample");
  if (is_power_of_two(samples.size())) {
    std::vector<Complex> bins = samples;
    fft_radix2(bins);
    return FourierCoefficients(center_and_normalize(bins),
                               static_cast<int>(samples.size()));
  }
  return dft_direct(samples);
}

FourierCoefficients dft_direct(const std::vector<Complex>& samples) {
  if (samples.empty()) throw std::invalid_argument("dft_direct: need at least one sample");
  const int n = static_cast<int>(samples.size());
  std::vector<Complex> bins(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    Complex acc(0.0, 0.0);
    for (int j = 0; j < n; ++j) {
      const double ang = -kTwoPi * static_cast<double>(j) * m / n;
      acc += samples[static_cast<std::size_t>(j)] * Complex(std::cos(ang), std::sin(ang));
    }
    bins[static_cast<std::size_t>(m)] = acc;
  }
  return FourierCoefficients(center_and_normalize(bins), n);
}

TrigInterpolant::TrigInterpolant(FourierCoefficients coefficients, double p,
                                 WeightFunction weight, MobiusMap map)
    : coeffs_(std::move(coefficients)), p_(p), weight_(std::move(weight)), map_(map) {
  if (!(p >= 1.0)) {
    throw std::invalid_argument("TrigInterpolant: exponent p must be >= 1");
  }
}

Complex TrigInterpolant::eval_periodic(double theta) const {
  const Complex z(std::cos(theta), std::sin(theta));
  const auto& c = coeffs_.values();
  // For even n the most negative frequency has no positive partner; its
  // complex exponential would make the interpolant of real data complex away
  // from the nodes. Evaluating that single mode as a cosine keeps the node
  // values exact (sin(k_min * theta_j) = 0 on the sampling grid) and the
  // interpolant real for real samples.
  const bool even = coeffs_.sample_count() % 2 == 0;
  const std::size_t start = even ? 1 : 0;
  // Horner over ascending k, then shift by e^{i k_lo theta}.
  Complex acc(0.0, 0.0);
  for (std::size_t i = c.size(); i-- > start;) acc = acc * z + c[i];
  const double phase = (coeffs_.k_min() + static_cast<int>(start)) * theta;
  Complex value = acc * Complex(std::cos(phase), std::sin(phase));
  if (even) value += c[0] * std::cos(coeffs_.k_min() * theta);
  return value;
}

double TrigInterpolant::eval_real(double x) const {
  const double theta = map_.inverse(x);
  const Complex b = eval_periodic(theta);
  if (std::abs(b.imag()) > 1e-9 * (1.0 + std::abs(b.real()))) {
    std::ostringstream msg;
    msg << "TrigInterpolant::eval_real: imaginary residue " << b.imag()
        << " exceeds tolerance at x = " << x;
    throw std::runtime_error(msg.str());
  }
  const double c = map_.c();
  const double jac = (x * x + c * c) / (2.0 * c);  // phi'(phi^{-1}(x))
  return b.real() * std::pow(weight_(x) * jac, -1.0 / p_);
}

std::string TrigInterpolant::to_json() const {
  nlohmann::json j;
  j["n"] = coeffs_.sample_count();
  j["p"] = p_;
  j["c"] = map_.c();
  j["weight_kind"] = to_string(weight_.kind);
  std::vector<double> re, im;
  re.reserve(coeffs_.values().size());
  im.reserve(coeffs_.values().size());
  for (const Complex& v : coeffs_.values()) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  j["coeff_re"] = re;
  j["coeff_im"] = im;
  return j.dump();
}

double evaluate_g_p(const RealFunction& f, const WeightFunction& weight,
                    const MobiusMap& map, double p, double theta) {
  if (theta == 0.0 || theta == kTwoPi) return 0.0;
  if (!(theta > 0.0) || !(theta < kTwoPi)) {
    throw std::domain_error("evaluate_g_p: theta must lie in [0, 2*pi]");
  }
  const double x = map.forward(theta);
  const double factor = std::pow(weight(x) * map.forward_derivative(theta), 1.0 / p);
  const double value = f(x) * factor;
  if (!std::isfinite(value)) {
    std::ostringstream msg;
    msg << "evaluate_g_p: non-finite value at x = " << x << " (theta = " << theta << ")";
    throw std::runtime_error(msg.str());
  }
  return value;
}

TrigInterpolant build_interpolant(const RealFunction& f, const WeightFunction& weight,
                                  const MobiusMap& map, int n, double p) {
  if (n < 2) throw std::invalid_argument("build_interpolant: need n >= 2 samples");
  if (!(p >= 1.0)) throw std::invalid_argument("build_interpolant: exponent p must be >= 1");
  std::vector<Complex> samples(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double theta = kTwoPi * j / n;
    samples[static_cast<std::size_t>(j)] = Complex(evaluate_g_p(f, weight, map, p, theta), 0.0);
  }
  return TrigInterpolant(dft(samples), p, weight, map);
}

double lp_error(const RealFunction& f, const TrigInterpolant& interp, int n_ref) {
  if (n_ref < 8 * interp.sample_count()) {
    throw std::invalid_argument("lp_error: n_ref must be at least 8 * interpolant size");
  }
  const double p = interp.exponent();
  KahanSum acc;
  for (int j = 0; j < n_ref; ++j) {
    const double theta = kTwoPi * j / n_ref;
    const double gp = evaluate_g_p(f, interp.weight(), interp.map(), p, theta);
    const double diff = std::abs(Complex(gp, 0.0) - interp.eval_periodic(theta));
    acc.add(std::pow(diff, p));
  }
  return std::pow(kTwoPi / n_ref * acc.value(), 1.0 / p);
}

}  // namespace mobiusquad
