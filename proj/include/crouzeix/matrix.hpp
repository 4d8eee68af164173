// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "crouzeix/errors.hpp"

namespace crouzeix {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Dense square complex matrix with finite entries and dimension n >= 1.
///
/// Immutable once constructed; every operation in the library takes one of
/// these by const reference and returns new values.
class ComplexMatrix {
 public:
  /// Throws InvalidMatrix if `m` is empty, not square, or has a non-finite
  /// entry.
  explicit ComplexMatrix(Matrix m);

  static ComplexMatrix identity(int n);
  static ComplexMatrix zero(int n);

  int n() const { return static_cast<int>(m_.rows()); }
  const Matrix& mat() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

  ComplexMatrix adjoint() const { return ComplexMatrix(m_.adjoint()); }
  ComplexMatrix transpose() const { return ComplexMatrix(m_.transpose()); }

 private:
  Matrix m_;
};

/// Polynomial c_0 + c_1 z + ... + c_N z^N. The leading coefficient may be
/// zero; the degree is nominal.
class Polynomial {
 public:
  /// Throws std::invalid_argument on an empty coefficient list.
  explicit Polynomial(std::vector<Complex> coeffs);

  /// z^k
  static Polynomial monomial(int k);

  const std::vector<Complex>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  Complex operator()(Complex z) const;

  /// True when every coefficient is exactly zero.
  bool is_zero() const;

  /// Coefficientwise conjugate: p~(z) = sum conj(c_k) z^k.
  Polynomial conjugated() const;
  Polynomial scaled(Complex c) const;
  /// q(z) = p(mu z + lambda).
  Polynomial compose_affine(Complex mu, Complex lambda) const;
  /// Euclidean norm of the coefficient vector.
  double coeff_norm() const;

 private:
  std::vector<Complex> c_;
};

}  // namespace crouzeix
