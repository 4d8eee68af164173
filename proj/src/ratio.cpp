// SPDX-License-Identifier: Apache-2.0
#include "crouzeix/ratio.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "simplex.hpp"

namespace crouzeix {
namespace {

// Scale below which p(A) or sup |p| counts as zero.
double zero_threshold(const Polynomial& p, double norm) {
  double s = 0.0, power = 1.0;
  for (const auto& c : p.coeffs()) {
    s += std::abs(c) * power;
    power *= 1.0 + norm;
  }
  return 1e-14 * s;
}

Polynomial from_params(std::span<const double> x) {
  std::vector<Complex> c(x.size() / 2);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = {x[2 * k], x[2 * k + 1]};
  return Polynomial(std::move(c));
}

std::vector<double> to_params(const Polynomial& p) {
  std::vector<double> x;
  x.reserve(2 * p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    x.push_back(c.real());
    x.push_back(c.imag());
  }
  return x;
}

Polynomial padded_monomial(int k, int degree) {
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1, 0.0);
  c[static_cast<std::size_t>(k)] = 1.0;
  return Polynomial(std::move(c));
}

}  // namespace

BlaschkeParams::BlaschkeParams(double gamma, std::vector<Complex> zeros)
    : gamma_(gamma), zeros_(std::move(zeros)) {
  for (const auto& a : zeros_) {
    if (!(std::abs(a) <= 1.0 - 1e-12))
      throw std::invalid_argument("Blaschke zeros must lie strictly inside the unit disk");
  }
}

Complex blaschke_eval(const BlaschkeParams& b, Complex z) {
  if (!(std::abs(z) <= 1.0 + 1e-9))
    throw std::invalid_argument("Blaschke product evaluated outside the closed disk");
  Complex acc = std::polar(1.0, b.gamma());
  for (const auto& a : b.zeros()) {
    const Complex den = 1.0 - std::conj(a) * z;
    if (std::abs(den) < 1e-14) throw PoleProximity("point too close to a Blaschke pole");
    acc *= (z - a) / den;
  }
  return acc;
}

RatioReport crouzeix_ratio(const NumericalRangeBoundary& b, const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("polynomial is identically zero");
  RatioReport rep;
  rep.coeffs = p.coeffs();
  rep.boundary_resolution = b.resolution();
  rep.degenerate_range = b.shape != RangeShape::Region;
  rep.norm_fA = operator_norm(poly_apply(p, b.matrix.mat()));
  rep.sup_f = sup_abs_on_range([&p](Complex z) { return p(z); }, b);

  const double zero = zero_threshold(p, b.norm);
  if (rep.sup_f <= zero) {
    if (rep.norm_fA > zero)
      throw DegenerateDivision("p vanishes on W(A) but p(A) does not");
    rep.ratio = 0.0;
  } else {
    rep.ratio = rep.norm_fA / rep.sup_f;
  }
  rep.passes = rep.ratio <= 2.0 + kPassTol;
  return rep;
}

RatioReport crouzeix_ratio(const ComplexMatrix& a, const Polynomial& p, int m) {
  return crouzeix_ratio(boundary(a, m), p);
}

RatioReport crouzeix_ratio_confirmed(const ComplexMatrix& a, const Polynomial& p, int m) {
  auto rep = crouzeix_ratio(a, p, m);
  for (int k = 0; k < 2 && !rep.passes; ++k) {
    m *= 2;
    rep = crouzeix_ratio(a, p, m);
  }
  return rep;
}

Vector extremal_vector(const ComplexMatrix& a, const ComplexMatrix& f_of_a) {
  if (a.n() != f_of_a.n()) throw std::invalid_argument("dimension mismatch");
  auto top = svd_top(f_of_a);
  if (top.sigma <= 1e-14 * (1.0 + operator_norm(a)))
    throw ZeroOperator("f(A) is the zero operator");
  return top.v;
}

SearchResult ratio_maximize(const ComplexMatrix& a, int degree, int budget,
                            std::uint64_t seed, int m) {
  if (degree < 1) throw std::invalid_argument("search degree must be at least 1");
  if (budget < 1) throw std::invalid_argument("search budget must be at least 1");

  const auto b = boundary(a, m);
  auto ratio_of = [&](const Polynomial& p) -> double {
    if (p.is_zero()) return 0.0;
    const double sup = sup_abs_on_range([&p](Complex z) { return p(z); }, b);
    if (sup <= zero_threshold(p, b.norm)) return 0.0;
    return operator_norm(poly_apply(p, a.mat())) / sup;
  };
  auto normalized = [&](const Polynomial& p) {
    const double sup = sup_abs_on_range([&p](Complex z) { return p(z); }, b);
    return sup > zero_threshold(p, b.norm) ? p.scaled(1.0 / sup) : p;
  };

  const int starts = std::max(8, 2 * degree);
  std::vector<Polynomial> seeds{padded_monomial(1, degree)};
  if (degree > 1) seeds.push_back(padded_monomial(degree, degree));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  while (static_cast<int>(seeds.size()) < starts) {
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = {normal(rng), normal(rng)};
    seeds.emplace_back(std::move(c));
  }

  struct Candidate {
    Polynomial p;
    double ratio;
  };
  std::vector<Candidate> found;
  for (const auto& s : seeds) {
    const Polynomial start = normalized(s);
    auto x0 = to_params(start);
    double scale = 0.0;
    for (double v : x0) scale = std::max(scale, std::abs(v));
    std::vector<double> steps(x0.size());
    for (std::size_t i = 0; i < x0.size(); ++i)
      steps[i] = 0.2 * std::max(std::abs(x0[i]), 0.1 * scale);

    auto res = detail::minimize_simplex(
        [&](std::span<const double> x) { return -ratio_of(from_params(x)); }, x0, steps,
        budget, 1e-12);
    found.push_back({normalized(from_params(res.x)), -res.value});
  }

  // Best ratio; near-ties go to the smaller normalized coefficient norm.
  double best_ratio = -1.0;
  for (const auto& c : found) best_ratio = std::max(best_ratio, c.ratio);
  const Candidate* pick = nullptr;
  for (const auto& c : found) {
    if (c.ratio < best_ratio - 1e-12) continue;
    if (!pick || c.p.coeff_norm() < pick->p.coeff_norm()) pick = &c;
  }
  return {pick->p, crouzeix_ratio(b, pick->p)};
}

SuiteReport conjecture_check(const ComplexMatrix& a, const std::vector<Polynomial>& suite,
                             int m) {
  if (suite.empty()) throw std::invalid_argument("polynomial suite is empty");
  const auto b = boundary(a, m);
  SuiteReport out;
  out.all_pass = true;
  for (const auto& p : suite) {
    try {
      out.reports.push_back(crouzeix_ratio(b, p));
    } catch (const std::exception& e) {
      RatioReport rep;
      rep.coeffs = p.coeffs();
      rep.boundary_resolution = b.resolution();
      rep.degenerate_range = b.shape != RangeShape::Region;
      rep.error = e.what();
      out.reports.push_back(std::move(rep));
    }
    out.all_pass = out.all_pass && out.reports.back().passes;
  }
  return out;
}

}  // namespace crouzeix
