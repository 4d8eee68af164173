// SPDX-License-Identifier: Apache-2.0
#include "crouzeix/modelspace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace crouzeix {
namespace {

constexpr int kMaxQuadrature = 1 << 16;

Complex circle_node(int k, int nodes) {
  return std::polar(1.0, 2.0 * std::numbers::pi * k / nodes);
}

// Row k: basis functions at the k-th circle node.
Matrix basis_samples(const ModelSpaceBasis& basis, int nodes) {
  Matrix s(nodes, basis.dim());
  for (int k = 0; k < nodes; ++k) {
    const Complex z = circle_node(k, nodes);
    for (int i = 0; i < basis.dim(); ++i) s(k, i) = basis.evaluate(i, z);
  }
  return s;
}

Matrix quadrature_once(const ScalarFunction& g, const ModelSpaceBasis& basis, int nodes) {
  const Matrix s = basis_samples(basis, nodes);
  Vector gv(nodes);
  for (int k = 0; k < nodes; ++k) gv(k) = g(circle_node(k, nodes));
  return s.adjoint() * gv.asDiagonal() * s / static_cast<double>(nodes);
}

}  // namespace

InnerFunctionSpec InnerFunctionSpec::monomial(int n) {
  if (n < 1) throw std::invalid_argument("monomial inner function needs n >= 1");
  return InnerFunctionSpec(Kind::Monomial, n, {});
}

InnerFunctionSpec InnerFunctionSpec::blaschke(std::vector<Complex> zeros) {
  if (zeros.empty()) throw std::invalid_argument("Blaschke product needs at least one zero");
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    if (!(std::abs(zeros[i]) <= 1.0 - 1e-10))
      throw std::invalid_argument("Blaschke zeros must lie inside the unit disk");
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(zeros[i] - zeros[j]) < 1e-8) throw ZerosTooClose("Blaschke zeros too close");
  }
  const int n = static_cast<int>(zeros.size());
  return InnerFunctionSpec(Kind::Blaschke, n, std::move(zeros));
}

Complex InnerFunctionSpec::operator()(Complex z) const {
  if (kind_ == Kind::Monomial) return std::pow(z, n_);
  Complex acc = 1.0;
  for (const auto& a : zeros_) acc *= (z - a) / (1.0 - std::conj(a) * z);
  return acc;
}

Complex ModelSpaceBasis::evaluate(int k, Complex z) const {
  if (k < 0 || k >= dim()) throw std::out_of_range("basis index out of range");
  if (spec_.kind() == InnerFunctionSpec::Kind::Monomial) return std::pow(z, k);
  const auto& a = spec_.zeros();
  Complex acc = std::sqrt(1.0 - std::norm(a[k])) / (1.0 - std::conj(a[k]) * z);
  for (int j = 0; j < k; ++j) acc *= (z - a[j]) / (1.0 - std::conj(a[j]) * z);
  return acc;
}

TrigSymbol::TrigSymbol(int kmin, std::vector<Complex> coeffs)
    : kmin_(kmin), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("symbol needs at least one coefficient");
}

Complex TrigSymbol::coefficient(int k) const {
  if (k < kmin() || k > kmax()) return 0.0;
  return coeffs_[static_cast<std::size_t>(k - kmin_)];
}

Complex TrigSymbol::operator()(Complex zeta) const {
  Complex acc = 0.0;
  for (int k = kmin(); k <= kmax(); ++k) acc += coefficient(k) * std::pow(zeta, k);
  return acc;
}

TrigSymbol TrigSymbol::conjugate() const {
  std::vector<Complex> c(coeffs_.rbegin(), coeffs_.rend());
  for (auto& x : c) x = std::conj(x);
  return TrigSymbol(-kmax(), std::move(c));
}

double TrigSymbol::max_abs_on_circle(int samples) const {
  double m = 0.0;
  for (int k = 0; k < samples; ++k) m = std::max(m, std::abs((*this)(circle_node(k, samples))));
  return m;
}

Complex boundary_inner_product(const ScalarFunction& f, const ScalarFunction& g, int nodes) {
  Complex acc = 0.0;
  for (int k = 0; k < nodes; ++k) {
    const Complex z = circle_node(k, nodes);
    acc += f(z) * std::conj(g(z));
  }
  return acc / static_cast<double>(nodes);
}

Matrix gram_matrix(const ModelSpaceBasis& basis, int nodes) {
  const Matrix s = basis_samples(basis, nodes);
  return s.adjoint() * s / static_cast<double>(nodes);
}

ComplexMatrix tto_quadrature(const ScalarFunction& g, const ModelSpaceBasis& basis, int nodes) {
  Matrix prev = quadrature_once(g, basis, nodes);
  while (nodes < kMaxQuadrature) {
    nodes *= 2;
    Matrix next = quadrature_once(g, basis, nodes);
    const double diff = (next - prev).cwiseAbs().maxCoeff();
    prev = std::move(next);
    if (diff <= 1e-10) break;
  }
  return ComplexMatrix(std::move(prev));
}

ComplexMatrix monomial_compressed_shift(int n) {
  if (n < 1) throw std::invalid_argument("model space dimension must be at least 1");
  Matrix s = Matrix::Zero(n, n);
  for (int j = 0; j + 1 < n; ++j) s(j + 1, j) = 1.0;
  return ComplexMatrix(std::move(s));
}

ComplexMatrix tto_monomial(const TrigSymbol& g, int n) {
  if (n < 1) throw std::invalid_argument("model space dimension must be at least 1");
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = g.coefficient(i - j);
  return ComplexMatrix(std::move(m));
}

ModelSpaceBasis takenaka_malmquist_basis(std::vector<Complex> zeros) {
  return ModelSpaceBasis(InnerFunctionSpec::blaschke(std::move(zeros)));
}

ComplexMatrix compressed_shift_blaschke(const ModelSpaceBasis& basis) {
  if (basis.spec().kind() != InnerFunctionSpec::Kind::Blaschke)
    throw std::invalid_argument("compressed_shift_blaschke needs a Blaschke basis");
  return tto_quadrature([](Complex z) { return z; }, basis);
}

ComplexMatrix compressed_shift(const ModelSpaceBasis& basis) {
  if (basis.spec().kind() == InnerFunctionSpec::Kind::Monomial)
    return monomial_compressed_shift(basis.dim());
  return compressed_shift_blaschke(basis);
}

ComplexMatrix tto_analytic(const Polynomial& p, const ModelSpaceBasis& basis) {
  return poly_apply(p, compressed_shift(basis));
}

ComplexMatrix tto_trig(const TrigSymbol& g, const ModelSpaceBasis& basis) {
  const ComplexMatrix s = compressed_shift(basis);
  const int n = basis.dim();

  Matrix out = Matrix::Zero(n, n);
  if (g.kmax() >= 0) {
    std::vector<Complex> analytic(static_cast<std::size_t>(g.kmax()) + 1);
    for (int k = 0; k <= g.kmax(); ++k) analytic[k] = g.coefficient(k);
    out += poly_apply(Polynomial(std::move(analytic)), s.mat());
  }
  if (g.kmin() < 0) {
    std::vector<Complex> co(static_cast<std::size_t>(-g.kmin()) + 1, 0.0);
    for (int k = 1; k <= -g.kmin(); ++k) co[k] = std::conj(g.coefficient(-k));
    out += poly_apply(Polynomial(std::move(co)), s.mat()).adjoint();
  }
  return ComplexMatrix(std::move(out));
}

Matrix conjugation_basis(int n) {
  if (n < 1) throw std::invalid_argument("model space dimension must be at least 1");
  const double r = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  Matrix v = Matrix::Zero(n, n);
  int col = 0;
  for (int k = 0; k < n - 1 - k; ++k) {
    const int l = n - 1 - k;
    v(k, col) = r;
    v(l, col) = r;
    ++col;
    v(k, col) = i * r;
    v(l, col) = -i * r;
    ++col;
  }
  if (n % 2 == 1) v((n - 1) / 2, col) = 1.0;
  return v;
}

ComplexMatrix creal_symmetric_representation(const ComplexMatrix& m,
                                             const InnerFunctionSpec& spec) {
  if (spec.kind() != InnerFunctionSpec::Kind::Monomial || spec.dim() != m.n())
    throw std::invalid_argument("symmetric representation needs the matching monomial space");
  const int n = m.n();
  double dev = 0.0;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) dev = std::max(dev, std::abs(m(i, j) - m(i - 1, j - 1)));
  if (dev > 1e-10) throw NotToeplitz("matrix is not Toeplitz");

  const Matrix v = conjugation_basis(n);
  return ComplexMatrix(v.adjoint() * m.mat() * v);
}

NumrangeMatch numrange_match_report(const ComplexMatrix& a, const ComplexMatrix& b, int m) {
  if (m < kMinResolution) throw std::invalid_argument("resolution must be at least 16");
  NumrangeMatch out;
  for (int k = 0; k < m; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / m;
    out.hausdorff = std::max(
        out.hausdorff, std::abs(support_function(a, theta).h - support_function(b, theta).h));
  }
  const double scale = 1.0 + std::max(operator_norm(a), operator_norm(b));
  out.match = out.hausdorff <= 1e-6 * scale;
  return out;
}

}  // namespace crouzeix
