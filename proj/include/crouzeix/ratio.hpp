// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crouzeix/numrange.hpp"

namespace crouzeix {

/// Slack on the ratio <= 2 comparison.
inline constexpr double kPassTol = 1e-7;

struct RatioReport {
  std::vector<Complex> coeffs;  // the polynomial tested
  double norm_fA = 0.0;
  double sup_f = 0.0;
  double ratio = 0.0;
  bool passes = false;
  int boundary_resolution = 0;
  bool degenerate_range = false;
  std::optional<std::string> error;  // set when the evaluation failed
};

struct SuiteReport {
  std::vector<RatioReport> reports;
  bool all_pass = false;
};

/// B(z) = e^{i gamma} prod_j (z - alpha_j) / (1 - conj(alpha_j) z).
class BlaschkeParams {
 public:
  /// Throws std::invalid_argument if some |alpha_j| > 1 - 1e-12.
  BlaschkeParams(double gamma, std::vector<Complex> zeros);

  double gamma() const { return gamma_; }
  const std::vector<Complex>& zeros() const { return zeros_; }
  int degree() const { return static_cast<int>(zeros_.size()); }

 private:
  double gamma_;
  std::vector<Complex> zeros_;
};

/// Evaluates B at |z| <= 1 + 1e-9. Throws PoleProximity when a denominator
/// drops below 1e-14 in modulus.
Complex blaschke_eval(const BlaschkeParams& b, Complex z);

/// |p(A)| / sup_{W(A)} |p| at boundary resolution m.
///
/// Throws DegenerateDivision when p vanishes on W(A) but p(A) does not. When
/// both vanish the ratio is reported as 0.
RatioReport crouzeix_ratio(const ComplexMatrix& a, const Polynomial& p,
                           int m = kDefaultResolution);
RatioReport crouzeix_ratio(const NumericalRangeBoundary& b, const Polynomial& p);

/// crouzeix_ratio, but a failing result is re-evaluated at 2m and 4m and only
/// reported as failing if every evaluation fails.
RatioReport crouzeix_ratio_confirmed(const ComplexMatrix& a, const Polynomial& p, int m);

/// Top right singular vector of f(A). Throws ZeroOperator when f(A) = 0.
Vector extremal_vector(const ComplexMatrix& a, const ComplexMatrix& f_of_a);

struct SearchResult {
  Polynomial best;  // normalized so that sup_{W(A)} |best| = 1
  RatioReport report;
};

/// Multi-start Nelder-Mead search over degree-`degree` polynomials for the
/// largest Crouzeix ratio. `budget` bounds objective evaluations per start.
/// Deterministic for a fixed seed; never worse than p(z) = z.
SearchResult ratio_maximize(const ComplexMatrix& a, int degree, int budget,
                            std::uint64_t seed, int m = kDefaultResolution);

/// One report per polynomial; per-item failures are recorded in the report
/// instead of aborting the batch.
SuiteReport conjecture_check(const ComplexMatrix& a, const std::vector<Polynomial>& suite,
                             int m = kDefaultResolution);

}  // namespace crouzeix
