// SPDX-License-Identifier: Apache-2.0
#include "crouzeix/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include "crouzeix/numrange.hpp"
#include "simplex.hpp"

namespace crouzeix {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Eigen::VectorXd singular_values(const Matrix& a) {
  return Eigen::JacobiSVD<Matrix>(a).singularValues();
}

}  // namespace

double operator_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return singular_values(a)(0);
}

double operator_norm(const ComplexMatrix& a) { return operator_norm(a.mat()); }

SvdTop svd_top(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return {svd.singularValues()(0), svd.matrixU().col(0), svd.matrixV().col(0)};
}

SvdTop svd_top(const ComplexMatrix& a) { return svd_top(a.mat()); }

HermitianEigenpair hermitian_top_eigenpair_unchecked(const Matrix& h) {
  const Matrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  if (es.info() != Eigen::Success) throw Error("Hermitian eigensolver did not converge");
  const auto last = sym.rows() - 1;
  return {es.eigenvalues()(last), es.eigenvectors().col(last)};
}

HermitianEigenpair hermitian_top_eigenpair(const ComplexMatrix& h) {
  const double norm = operator_norm(h);
  if (operator_norm(Matrix(h.mat() - h.mat().adjoint())) > kHermTol * norm)
    throw NotHermitian("matrix is not Hermitian to tolerance");
  return hermitian_top_eigenpair_unchecked(h.mat());
}

double condition_similarity(const Matrix& x) {
  const auto s = singular_values(x);
  const double smax = s(0), smin = s(s.size() - 1);
  const double eps = std::numeric_limits<double>::epsilon();
  if (smax == 0.0 || smin <= x.rows() * eps * smax)
    throw SingularMatrix("matrix is numerically singular");
  return smax / smin;
}

double condition_similarity(const ComplexMatrix& x) { return condition_similarity(x.mat()); }

EigenDecomposition eigen_full(const ComplexMatrix& a) {
  Eigen::ComplexEigenSolver<Matrix> es(a.mat(), true);
  if (es.info() != Eigen::Success) throw Error("eigensolver did not converge");

  EigenDecomposition ed;
  const int n = a.n();
  ed.vectors = es.eigenvectors();
  ed.values.resize(n);
  for (int j = 0; j < n; ++j) {
    ed.values[j] = es.eigenvalues()(j);
    const double cn = ed.vectors.col(j).norm();
    if (cn > 0.0) ed.vectors.col(j) /= cn;
    const double r = (a.mat() * ed.vectors.col(j) - ed.values[j] * ed.vectors.col(j)).norm();
    ed.residual = std::max(ed.residual, r);
  }
  try {
    ed.kappa = condition_similarity(ed.vectors);
  } catch (const SingularMatrix&) {
    ed.kappa = kInf;
  }
  const double norm = operator_norm(a);
  ed.diagonalizable = ed.residual <= kDefectResidual * norm && ed.kappa <= kDefectKappa;
  return ed;
}

Matrix poly_apply(const Polynomial& p, const Matrix& a) {
  const auto& c = p.coeffs();
  const auto n = a.rows();
  Matrix r = c.back() * Matrix::Identity(n, n);
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) {
    r = r * a;
    r.diagonal().array() += *it;
  }
  return r;
}

ComplexMatrix poly_apply(const Polynomial& p, const ComplexMatrix& a) {
  return ComplexMatrix(poly_apply(p, a.mat()));
}

Matrix matrix_exponential(const Matrix& a) { return a.exp(); }

ComplexMatrix matrix_exponential(const ComplexMatrix& a) {
  return ComplexMatrix(matrix_exponential(a.mat()));
}

ComplexMatrix analytic_apply_contour(const ScalarFunction& f, const ComplexMatrix& a,
                                     Complex center, double radius, int m) {
  if (m < 16) throw std::invalid_argument("contour needs at least 16 nodes");
  if (!(radius > 0.0)) throw std::invalid_argument("contour radius must be positive");

  // The disk contains W(A) iff h(theta) - Re(e^{i theta} c) <= r in every direction.
  const auto b = boundary(a, 256);
  const double margin = 1e-10 * (1.0 + b.norm);
  for (int k = 0; k < b.resolution(); ++k) {
    const double reach = b.support[k] - (std::polar(1.0, b.angles[k]) * center).real();
    if (reach >= radius - margin)
      throw ContourTooSmall("numerical range reaches the integration contour");
  }

  const int n = a.n();
  const Matrix id = Matrix::Identity(n, n);
  Matrix acc = Matrix::Zero(n, n);
  for (int k = 0; k < m; ++k) {
    const Complex w = std::polar(radius, 2.0 * std::numbers::pi * k / m);
    const Complex z = center + w;
    Eigen::PartialPivLU<Matrix> lu(z * id - a.mat());
    if (!(lu.rcond() > 1e-14)) throw SingularResolvent("resolvent is numerically singular");
    acc += (f(z) * w / static_cast<double>(m)) * lu.solve(id);
  }
  return ComplexMatrix(std::move(acc));
}

ComplexMatrix analytic_apply(const ScalarFunction& f, const ComplexMatrix& a) {
  const auto b = boundary(a, 256);
  double reach = 0.0;
  for (int k = 0; k < b.resolution(); ++k) {
    reach = std::max(reach, b.support[k] - (std::polar(1.0, b.angles[k]) * b.center).real());
  }
  const double radius = 1.1 * reach + 1e-8 * (1.0 + b.norm);

  int m = 256;
  Matrix prev = analytic_apply_contour(f, a, b.center, radius, m).mat();
  while (m < 4096) {
    m *= 2;
    Matrix next = analytic_apply_contour(f, a, b.center, radius, m).mat();
    const double diff = operator_norm(Matrix(next - prev));
    prev = std::move(next);
    if (diff <= 1e-10 * (1.0 + operator_norm(prev))) break;
  }
  return ComplexMatrix(std::move(prev));
}

bool is_normal(const ComplexMatrix& a, double tol) {
  const Matrix& m = a.mat();
  const double norm = operator_norm(m);
  return operator_norm(Matrix(m * m.adjoint() - m.adjoint() * m)) <= tol * norm * norm;
}

SimilarityReport eigen_similarity_check(const ComplexMatrix& a) {
  SimilarityReport rep;
  Matrix x;
  if (is_normal(a)) {
    // Schur vectors of a normal matrix diagonalize it unitarily.
    Eigen::ComplexSchur<Matrix> schur(a.mat());
    x = schur.matrixU();
  } else {
    auto ed = eigen_full(a);
    if (!ed.diagonalizable) {
      rep.kappa = ed.kappa;
      return rep;
    }
    x = std::move(ed.vectors);
  }
  rep.diagonalizable = true;

  for (int j = 0; j < x.cols(); ++j) x.col(j).normalize();
  double kappa = condition_similarity(x);

  // Balancing pass over positive column scalings X diag(e^{s}), s_0 = 0.
  const int n = a.n();
  if (n > 1 && kappa > 1.0 + 1e-14) {
    auto objective = [&](std::span<const double> s) {
      Matrix y = x;
      for (int j = 1; j < n; ++j) y.col(j) *= std::exp(s[j - 1]);
      try {
        return condition_similarity(y);
      } catch (const SingularMatrix&) {
        return kInf;
      }
    };
    auto res = detail::minimize_simplex(objective, std::vector<double>(n - 1, 0.0),
                                        std::vector<double>(n - 1, 0.5), 200 * n, 1e-8);
    kappa = std::min(kappa, res.value);
  }
  rep.kappa = kappa;
  rep.certifies = kappa <= 2.0;
  return rep;
}

}  // namespace crouzeix
