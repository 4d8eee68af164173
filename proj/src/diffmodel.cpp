// SPDX-License-Identifier: Apache-2.0
#include "crouzeix/diffmodel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include <Eigen/SVD>

#include "crouzeix/cyclic.hpp"
#include "crouzeix/linalg.hpp"

namespace crouzeix {
namespace {

// Relative singular-value cutoff for the sampled lift rank.
constexpr double kRankTol = 1e-13;

// p(D) f by Horner's rule on lifted functions.
LiftedFunction poly_of_diff(const Polynomial& p, const LiftedFunction& f) {
  const auto& c = p.coeffs();
  LiftedFunction acc(c.back() * f.u(), f.a(), f.v());
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) {
    auto d = diff_apply(acc);
    acc = LiftedFunction(d.u() + *it * f.u(), f.a(), f.v());
  }
  return acc;
}

}  // namespace

LiftedFunction::LiftedFunction(Vector u, ComplexMatrix a, Vector v)
    : u_(std::move(u)), a_(std::move(a)), v_(std::move(v)) {
  if (u_.size() != a_.n() || v_.size() != a_.n())
    throw std::invalid_argument("lifted function dimension mismatch");
}

Complex lift_eval(const LiftedFunction& f, Complex z) {
  const Matrix e = matrix_exponential(Matrix(z * f.a().mat()));
  return f.v().dot(e * f.u());
}

LiftedFunction diff_apply(const LiftedFunction& f) {
  return LiftedFunction(f.a().mat() * f.u(), f.a(), f.v());
}

LiftRank lift_injectivity(const ComplexMatrix& a, const Vector& v) {
  const int n = a.n();
  const int points = 4 * n;
  const double r = 1.0 / (1.0 + operator_norm(a));
  Matrix samples(points, n);
  for (int k = 0; k < points; ++k) {
    const Complex z = std::polar(r, 2.0 * std::numbers::pi * k / points);
    // Row k holds <e^{zA} e_i, v> = (v* e^{zA})_i.
    samples.row(k) = v.adjoint() * matrix_exponential(Matrix(z * a.mat()));
  }
  const auto s = Eigen::JacobiSVD<Matrix>(samples).singularValues();
  LiftRank out;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > kRankTol * s(0)) ++out.rank;
  const double smin = s(s.size() - 1);
  out.gram_condition =
      smin > 0.0 ? (s(0) / smin) * (s(0) / smin) : std::numeric_limits<double>::infinity();
  return out;
}

ModelNormReport model_norm_check(const ComplexMatrix& a, const Vector& v, const Polynomial& p,
                                 int samples, std::uint64_t seed) {
  if (!is_cyclic_vector(a.adjoint(), v)) throw NotCyclic("v is not cyclic for A*");
  const int n = a.n();

  ModelNormReport rep;
  const auto lr = lift_injectivity(a, v);
  rep.gram_rank = lr.rank;
  rep.gram_condition = lr.gram_condition;
  if (lr.rank < n) throw RankDeficientLift("sampled lift is rank deficient");

  const Matrix pa = poly_apply(p, a.mat());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  for (int s = 0; s < samples; ++s) {
    Vector u(n);
    for (int i = 0; i < n; ++i) u(i) = {normal(rng), normal(rng)};
    const double model = poly_of_diff(p, LiftedFunction(u, a, v)).norm();
    const double direct = (pa * u).norm();
    rep.max_discrepancy =
        std::max(rep.max_discrepancy, std::abs(model - direct) / std::max(1.0, direct));
  }
  rep.samples = samples;

  // Coordinate matrix of p(D): column i is the lift coordinates of p(D) e_i~.
  Matrix pd(n, n);
  for (int i = 0; i < n; ++i)
    pd.col(i) = poly_of_diff(p, LiftedFunction(Vector::Unit(n, i), a, v)).u();
  rep.model_operator_norm = operator_norm(pd);
  rep.matrix_operator_norm = operator_norm(pa);
  return rep;
}

}  // namespace crouzeix
