// SPDX-License-Identifier: Apache-2.0
#include "crouzeix/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace crouzeix {

ComplexMatrix::ComplexMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() < 1 || m_.rows() != m_.cols())
    throw InvalidMatrix("matrix must be square with n >= 1");
  if (!m_.allFinite())
    throw InvalidMatrix("matrix has a non-finite entry");
}

ComplexMatrix ComplexMatrix::identity(int n) { return ComplexMatrix(Matrix::Identity(n, n)); }

ComplexMatrix ComplexMatrix::zero(int n) { return ComplexMatrix(Matrix::Zero(n, n)); }

Polynomial::Polynomial(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
}

Polynomial Polynomial::monomial(int k) {
  if (k < 0) throw std::invalid_argument("monomial power must be non-negative");
  std::vector<Complex> c(static_cast<std::size_t>(k) + 1, 0.0);
  c.back() = 1.0;
  return Polynomial(std::move(c));
}

Complex Polynomial::operator()(Complex z) const {
  Complex acc = c_.back();
  for (auto it = c_.rbegin() + 1; it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

bool Polynomial::is_zero() const {
  for (const auto& c : c_)
    if (c != Complex(0.0)) return false;
  return true;
}

Polynomial Polynomial::conjugated() const {
  std::vector<Complex> c(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) c[k] = std::conj(c_[k]);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(Complex s) const {
  std::vector<Complex> c(c_);
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::compose_affine(Complex mu, Complex lambda) const {
  // Horner in the polynomial ring: q = (...(c_N (mu z + lambda) + c_{N-1}) ...).
  std::vector<Complex> q{c_.back()};
  for (auto it = c_.rbegin() + 1; it != c_.rend(); ++it) {
    std::vector<Complex> next(q.size() + 1, 0.0);
    for (std::size_t k = 0; k < q.size(); ++k) {
      next[k] += q[k] * lambda;
      next[k + 1] += q[k] * mu;
    }
    next[0] += *it;
    q = std::move(next);
  }
  return Polynomial(std::move(q));
}

double Polynomial::coeff_norm() const {
  double s = 0.0;
  for (const auto& c : c_) s += std::norm(c);
  return std::sqrt(s);
}

}  // namespace crouzeix
