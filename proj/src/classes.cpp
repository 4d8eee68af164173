// SPDX-License-Identifier: Apache-2.0
#include "crouzeix/classes.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "crouzeix/linalg.hpp"

namespace crouzeix {

ComplexMatrix affine_transform(const ComplexMatrix& a, Complex mu, Complex lambda) {
  Matrix b = mu * a.mat();
  b.diagonal().array() += lambda;
  return ComplexMatrix(std::move(b));
}

ComplexMatrix direct_sum(std::span<const ComplexMatrix> blocks) {
  if (blocks.empty()) throw std::invalid_argument("direct sum of an empty list");
  int total = 0;
  for (const auto& b : blocks) total += b.n();
  Matrix out = Matrix::Zero(total, total);
  int offset = 0;
  for (const auto& b : blocks) {
    out.block(offset, offset, b.n(), b.n()) = b.mat();
    offset += b.n();
  }
  return ComplexMatrix(std::move(out));
}

ComplexMatrix kronecker(const ComplexMatrix& m, const ComplexMatrix& n) {
  const int p = m.n(), q = n.n();
  Matrix out(p * q, p * q);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) out.block(i * q, j * q, q, q) = m(i, j) * n.mat();
  return ComplexMatrix(std::move(out));
}

TensorReduction normal_tensor_reduce(const ComplexMatrix& n, const ComplexMatrix& a) {
  if (!is_normal(n)) throw NotNormal("tensor factor is not normal");
  Eigen::ComplexSchur<Matrix> schur(n.mat());
  TensorReduction out;
  out.u = schur.matrixU();
  for (int i = 0; i < n.n(); ++i)
    out.blocks.push_back(affine_transform(a, schur.matrixT()(i, i), 0.0));

  const ComplexMatrix w = kronecker(ComplexMatrix(out.u), ComplexMatrix::identity(a.n()));
  const Matrix conj = w.mat().adjoint() * kronecker(n, a).mat() * w.mat();
  out.residual = operator_norm(Matrix(conj - direct_sum(out.blocks).mat()));
  return out;
}

RankOneCanonical rank_one_canonical(const RankOneSpec& spec) {
  const double un = spec.u.norm(), vn = spec.v.norm();
  if (un == 0.0 || vn == 0.0) throw ZeroVector("rank-one factors must be nonzero");
  if (spec.u.size() != spec.v.size()) throw std::invalid_argument("dimension mismatch");
  const auto n = spec.u.size();

  const Vector x1 = spec.u / un;
  const Vector rest = spec.v - x1 * x1.dot(spec.v);
  const bool parallel = rest.norm() <= 1e-12 * vn || n == 1;

  Matrix frame(n, parallel ? 1 : 2);
  frame.col(0) = x1;
  if (!parallel) frame.col(1) = rest / rest.norm();
  Eigen::HouseholderQR<Matrix> qr(frame);
  const Matrix q = qr.householderQ() * Matrix::Identity(n, n);

  RankOneCanonical out{q.adjoint(), ComplexMatrix(q.adjoint() * spec.matrix() * q),
                       parallel ? 1 : 2};
  return out;
}

ComplexMatrix jordan_nilpotent(int n) {
  if (n < 1) throw std::invalid_argument("Jordan block size must be at least 1");
  Matrix j = Matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) j(i, i + 1) = 1.0;
  return ComplexMatrix(std::move(j));
}

ComplexMatrix paper_example(double t) {
  Matrix a = Matrix::Zero(3, 3);
  a(0, 1) = 1.0;
  a(1, 2) = 1.0 - t;
  return ComplexMatrix(std::move(a));
}

bool paper_example_in_window(double t) {
  return t >= 1.0 - 1.0 / std::sqrt(3.0) && t <= std::sqrt(3.0) - 1.0;
}

BorderAugmentation border_augment(const ComplexMatrix& a, Complex d, int m) {
  Matrix b = Matrix::Zero(a.n() + 1, a.n() + 1);
  b.topLeftCorner(a.n(), a.n()) = a.mat();
  b(a.n(), a.n()) = d;
  return {ComplexMatrix(std::move(b)), contains_point(boundary(a, m), d)};
}

BorderSelection select_border_point(const ComplexMatrix& a, const Polynomial& p) {
  const double norm = operator_norm(poly_apply(p, a));
  const auto values = eigen_full(a).values;
  BorderSelection out;
  double best = std::abs(p(values.front()));
  out.d = values.front();
  for (const auto& l : values) {
    if (std::abs(p(l)) < best) {
      best = std::abs(p(l));
      out.d = l;
    }
  }
  out.branch = best <= norm + 1e-12 * (1.0 + norm) ? BorderBranch::PointAvailable
                                                  : BorderBranch::NormBelowInfimum;
  return out;
}

ComplexMatrix basis_matrix(int i, int j, int n) {
  if (n < 1 || i < 1 || j < 1 || i > n || j > n)
    throw std::out_of_range("basis matrix index out of range");
  Matrix e = Matrix::Zero(n, n);
  e(i - 1, j - 1) = 1.0;
  return ComplexMatrix(std::move(e));
}

}  // namespace crouzeix
