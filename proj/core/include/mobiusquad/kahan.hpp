// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace mobiusquad {

/// Compensated (Kahan) accumulator. Keeps nested and direct summation
/// paths in tight agreement and makes results reproducible for a fixed
/// summation order.
struct KahanSum {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double value) {
    const double y = value - compensation;
    const double t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
  }

  double value() const { return sum; }
};

}  // namespace mobiusquad
