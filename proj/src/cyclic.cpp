// SPDX-License-Identifier: Apache-2.0
#include "crouzeix/cyclic.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "crouzeix/linalg.hpp"

namespace crouzeix {
namespace {

constexpr std::uint64_t kProbeSeed = 0x9e3779b97f4a7c15ULL;

Vector random_unit_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vector y(n);
  for (int i = 0; i < n; ++i) y(i) = {normal(rng), normal(rng)};
  return y / y.norm();
}

}  // namespace

double krylov_tolerance(int n) { return 1e-10 * n; }

KrylovBasis krylov_subspace(const ComplexMatrix& a, const Vector& y, double tol) {
  const int n = a.n();
  if (y.size() != n) throw std::invalid_argument("dimension mismatch");
  const double ynorm = y.norm();
  if (ynorm == 0.0) throw ZeroVector("Krylov generator is zero");
  if (tol < 0.0) tol = krylov_tolerance(n);
  const double threshold = tol * operator_norm(a);

  Matrix q(n, n);
  q.col(0) = y / ynorm;
  int d = 1;
  while (d < n) {
    Vector w = a.mat() * q.col(d - 1);
    for (int pass = 0; pass < 2; ++pass) {
      w -= q.leftCols(d) * (q.leftCols(d).adjoint() * w);
    }
    const double wn = w.norm();
    if (wn <= threshold) break;
    q.col(d) = w / wn;
    ++d;
  }
  return {q.leftCols(d), d, y};
}

bool is_cyclic_vector(const ComplexMatrix& a, const Vector& y) {
  return krylov_subspace(a, y).dim == a.n();
}

Polynomial minimal_polynomial(const ComplexMatrix& a, double tol) {
  // Working with A / s, s = 1 + |A|, turns the criterion into |m^(A/s)| <= tol.
  const int n = a.n();
  const double s = 1.0 + operator_norm(a);
  const Matrix as = a.mat() / s;

  Matrix powers(n * n, n + 1);
  Matrix p = Matrix::Identity(n, n);
  for (int k = 0; k <= n; ++k) {
    powers.col(k) = p.reshaped();
    p = p * as;
  }

  std::vector<Complex> best;
  for (int k = 1; k <= n; ++k) {
    Eigen::ColPivHouseholderQR<Matrix> qr(powers.leftCols(k));
    const Vector c = qr.solve(powers.col(k));
    const Matrix residual = (powers.col(k) - powers.leftCols(k) * c).reshaped(n, n);
    // m(z) = s^k m^(z/s): coefficient of z^j picks up s^{k-j}.
    std::vector<Complex> coeffs(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j < k; ++j) coeffs[j] = -c(j) * std::pow(s, k - j);
    coeffs[k] = 1.0;
    best = std::move(coeffs);
    if (operator_norm(residual) <= tol) break;
  }
  return Polynomial(std::move(best));
}

bool is_cyclic_matrix(const ComplexMatrix& a) {
  const bool by_minpoly = minimal_polynomial(a).degree() == a.n();
  std::mt19937_64 rng(kProbeSeed);
  const bool by_krylov = is_cyclic_vector(a, random_unit_vector(a.n(), rng));
  if (by_minpoly != by_krylov)
    throw NumericallyAmbiguous("minimal-polynomial and Krylov cyclicity tests disagree");
  return by_minpoly;
}

ComplexMatrix compress(const ComplexMatrix& a, const Matrix& q) {
  return ComplexMatrix(q.adjoint() * a.mat() * q);
}

ComplexMatrix compress(const ComplexMatrix& a, const KrylovBasis& basis) {
  return compress(a, basis.q);
}

CyclicCertificate maincor_certificate(const ComplexMatrix& a, const Polynomial& f, int m) {
  const auto b = boundary(a, m);
  const double sup = sup_abs_on_range([&f](Complex z) { return f(z); }, b);
  if (!(sup > 0.0)) throw std::invalid_argument("f vanishes on the numerical range");

  const Matrix fa = poly_apply(f, a.mat());
  Eigen::JacobiSVD<Matrix> svd(fa, Eigen::ComputeFullV);
  const double smax = svd.singularValues()(0);

  CyclicCertificate first;
  bool have_first = false;
  for (int j = 0; j < a.n(); ++j) {
    if (svd.singularValues()(j) < smax - 1e-10 * std::max(1.0, smax)) break;
    const Vector x = svd.matrixV().col(j);
    const auto v = krylov_subspace(a, x);
    CyclicCertificate c;
    c.extremal_vector = x;
    c.krylov_dim = v.dim;
    c.norm_fA = smax;
    c.norm_f_compressed = operator_norm(poly_apply(f, compress(a, v).mat()));
    c.norms_equal = std::abs(c.norm_fA - c.norm_f_compressed) <= 1e-8 * std::max(1.0, smax);
    c.certifies = c.krylov_dim <= 2 && c.norms_equal;
    c.candidates = j + 1;
    if (c.certifies) return c;
    if (!have_first) {
      first = c;
      have_first = true;
    }
    first.candidates = j + 1;
  }
  return first;
}

Vector find_cyclic_vector(const ComplexMatrix& a, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Vector v = random_unit_vector(a.n(), rng);
    if (is_cyclic_vector(a, v)) return v;
  }
  throw NotCyclic("no cyclic vector found after 8 attempts");
}

}  // namespace crouzeix
