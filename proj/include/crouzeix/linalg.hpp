// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

#include "crouzeix/matrix.hpp"

namespace crouzeix {

/// Relative eigen-residual tolerance, scaled by n at the call site.
inline constexpr double kEigTol = 1e-12;
/// Hermiticity tolerance relative to the operator norm.
inline constexpr double kHermTol = 1e-10;
/// Column residual above this fraction of the norm flags a defective matrix.
inline constexpr double kDefectResidual = 1e-6;
/// Eigenvector conditioning above this flags a defective matrix.
inline constexpr double kDefectKappa = 1e8;

using ScalarFunction = std::function<Complex(Complex)>;

struct SvdTop {
  double sigma = 0.0;
  Vector u;  // left singular vector
  Vector v;  // right singular vector, A v = sigma u
};

struct HermitianEigenpair {
  double lambda = 0.0;
  Vector x;
};

struct EigenDecomposition {
  std::vector<Complex> values;
  Matrix vectors;          // unit-norm columns
  double residual = 0.0;   // max_j |A x_j - lambda_j x_j|
  double kappa = 0.0;      // condition number of `vectors`, inf if singular
  bool diagonalizable = false;
};

struct SimilarityReport {
  bool diagonalizable = false;
  double kappa = 0.0;  // after column normalization and balancing
  bool certifies = false;
};

/// Largest singular value.
double operator_norm(const ComplexMatrix& a);
double operator_norm(const Matrix& a);

/// Top singular triple.
SvdTop svd_top(const ComplexMatrix& a);
SvdTop svd_top(const Matrix& a);

/// Largest eigenvalue of (H + H*)/2 with a unit eigenvector. Throws
/// NotHermitian when |H - H*| > kHermTol |H|.
HermitianEigenpair hermitian_top_eigenpair(const ComplexMatrix& h);

/// Same as above without the Hermiticity check; `h` is symmetrized.
HermitianEigenpair hermitian_top_eigenpair_unchecked(const Matrix& h);

/// Complex Schur based eigendecomposition. Defective matrices come back with
/// `diagonalizable == false` rather than an error.
EigenDecomposition eigen_full(const ComplexMatrix& a);

/// c_0 I + c_1 A + ... + c_N A^N by Horner's rule.
ComplexMatrix poly_apply(const Polynomial& p, const ComplexMatrix& a);
Matrix poly_apply(const Polynomial& p, const Matrix& a);

ComplexMatrix matrix_exponential(const ComplexMatrix& a);
Matrix matrix_exponential(const Matrix& a);

/// f(A) by the trapezoid rule for (1/2 pi i) \oint f(z) (zI - A)^{-1} dz on
/// the circle |z - center| = radius with m nodes.
///
/// Throws ContourTooSmall if a boundary point of W(A) is within `margin` of
/// the circle or outside it, and SingularResolvent if a resolvent solve is
/// numerically singular. m must be at least 16.
ComplexMatrix analytic_apply_contour(const ScalarFunction& f, const ComplexMatrix& a,
                                     Complex center, double radius, int m);

/// Automatic contour: centered at the mean boundary point of W(A), radius
/// 1.1 x the largest distance to the sampled boundary plus 1e-8, node count
/// starting at 256 and doubled until successive results agree to 1e-10
/// (capped at 4096).
ComplexMatrix analytic_apply(const ScalarFunction& f, const ComplexMatrix& a);

/// sigma_max(X) / sigma_min(X). Throws SingularMatrix.
double condition_similarity(const ComplexMatrix& x);
double condition_similarity(const Matrix& x);

/// Sufficient condition A = X Lambda X^{-1} with kappa(X) <= 2.
SimilarityReport eigen_similarity_check(const ComplexMatrix& a);

/// Commutator test |A A* - A* A| <= tol |A|^2.
bool is_normal(const ComplexMatrix& a, double tol = 1e-10);

}  // namespace crouzeix
