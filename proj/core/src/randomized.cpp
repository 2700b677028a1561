// SPDX-License-Identifier: Apache-2.0
#include "mobiusquad/randomized.hpp"

#include <cmath>
#include <stdexcept>

#include "mobiusquad/kahan.hpp"

namespace mobiusquad {

RandomizedDraw draw(int n, Rng& rng) {
  if (n < 2) {
    throw std::invalid_argument("draw: node budget n must be >= 2");
  }
  std::uniform_int_distribution<int> m_dist(n / 2, n);
  std::uniform_real_distribution<double> d_dist(0.0, 1.0);
  RandomizedDraw d;
  d.node_count = m_dist(rng);
  d.delta = d_dist(rng);
  return d;
}

double integrate_once(const TransformedIntegrand& ti, int n, Rng& rng) {
  const RandomizedDraw d = draw(n, rng);
  const int m = d.node_count;
  KahanSum acc;
  for (int j = 0; j < m; ++j) {
    const double theta = kTwoPi * (j + d.delta) / m;
    acc.add(evaluate_g(ti, theta));
  }
  return kTwoPi / m * acc.value();
}

Rng substream(std::uint64_t seed, int n, int rep) {
  std::seed_seq seq{static_cast<std::uint64_t>(seed),
                    static_cast<std::uint64_t>(n),
                    static_cast<std::uint64_t>(rep)};
  return Rng(seq);
}

RmseReport rmse_study(const TransformedIntegrand& ti, const std::vector<int>& ns,
                      int replications, double reference, std::uint64_t seed,
                      double error_floor) {
  if (replications < 2) {
    throw std::invalid_argument("rmse_study: at least 2 replications required");
  }
  if (!std::isfinite(reference)) {
    throw std::invalid_argument("rmse_study: reference must be finite");
  }

  RmseReport report;
  report.reference = reference;
  report.error_floor = error_floor;

  std::vector<std::pair<int, double>> points;
  for (int n : ns) {
    KahanSum sq;
    for (int rep = 0; rep < replications; ++rep) {
      Rng rng = substream(seed, n, rep);
      const double err = integrate_once(ti, n, rng) - reference;
      sq.add(err * err);
    }
    const double rmse = std::sqrt(sq.value() / replications);
    report.entries.push_back({n, rmse, replications});
    points.emplace_back(n, rmse);
  }
  report.fitted_slope = fit_loglog_slope(points, error_floor);
  return report;
}

}  // namespace mobiusquad
