// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace crouzeix::detail {

struct ScalarMax {
  double arg = 0.0;
  double value = 0.0;
};

/// Golden-section search for a maximum of g on [lo, hi]. Returns the best
/// point evaluated, endpoints included, so the result never falls below
/// max(g(lo), g(hi)).
template <typename G>
ScalarMax golden_section_max(G&& g, double lo, double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  ScalarMax best{lo, g(lo)};
  auto consider = [&](double x, double v) {
    if (v > best.value) best = {x, v};
  };
  consider(hi, g(hi));

  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double g1 = g(x1), g2 = g(x2);
  consider(x1, g1);
  consider(x2, g2);
  while (hi - lo > tol) {
    if (g1 >= g2) {
      hi = x2;
      x2 = x1;
      g2 = g1;
      x1 = hi - kInvPhi * (hi - lo);
      g1 = g(x1);
      consider(x1, g1);
    } else {
      lo = x1;
      x1 = x2;
      g1 = g2;
      x2 = lo + kInvPhi * (hi - lo);
      g2 = g(x2);
      consider(x2, g2);
    }
  }
  return best;
}

}  // namespace crouzeix::detail
