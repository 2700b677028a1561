// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "mobiusquad/quadrature.hpp"

namespace mobiusquad {

using Rng = std::mt19937_64;

/// One realization of the randomization: a node count M drawn uniformly from
/// {floor(n/2), ..., n} and a grid-shift fraction delta uniform on [0, 1),
/// independent of each other.
struct RandomizedDraw {
  int node_count = 0;   // M
  double delta = 0.0;   // shift fraction
};

RandomizedDraw draw(int n, Rng& rng);

/// One realization of the randomized rule:
///   (2*pi/M) * sum_{j=0}^{M-1} g(2*pi*(j+delta)/M)
/// using a fresh draw from rng. The actual node count used is M <= n.
double integrate_once(const TransformedIntegrand& ti, int n, Rng& rng);

struct RmseEntry {
  int n = 0;
  double rmse = 0.0;
  int replication_count = 0;
};

struct RmseReport {
  std::vector<RmseEntry> entries;
  double reference = 0.0;
  std::optional<double> fitted_slope;
  double error_floor = 1e-12;
};

/// RMSE against a known reference over independent replications. Each
/// replication runs on its own RNG substream derived from (seed, n, index),
/// so changing the replication count or the ladder never reshuffles the
/// draws of other entries. Slope fitted as in convergence_study.
RmseReport rmse_study(const TransformedIntegrand& ti, const std::vector<int>& ns,
                      int replications, double reference, std::uint64_t seed,
                      double error_floor = 1e-12);

/// Deterministic substream engine for replication `rep` of a study at node
/// budget n under the given master seed.
Rng substream(std::uint64_t seed, int n, int rep);

}  // namespace mobiusquad
