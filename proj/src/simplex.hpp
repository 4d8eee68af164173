// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <span>
#include <vector>

namespace crouzeix::detail {

using Objective = std::function<double(std::span<const double>)>;

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
};

/// Nelder-Mead minimization (GSL nmsimplex2) with restarts from the best
/// vertex whenever the simplex collapses below `size_tol`, until `max_evals`
/// objective evaluations are spent or a restart fails to improve.
/// Non-finite objective values are treated as +huge. `steps` holds the initial
/// simplex edge per coordinate.
SimplexResult minimize_simplex(const Objective& f, std::vector<double> x0,
                               std::vector<double> steps, int max_evals,
                               double size_tol = 1e-10);

}  // namespace crouzeix::detail
