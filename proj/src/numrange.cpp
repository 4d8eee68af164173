// SPDX-License-Identifier: Apache-2.0
#include "crouzeix/numrange.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "golden.hpp"

namespace crouzeix {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kRefinedMaxima = 4;
constexpr int kChordSamples = 32;
constexpr int kSegmentSamples = 512;

// Maximizes |f| along the segment [a, b].
double sup_on_segment(const ScalarFunction& f, Complex a, Complex b, int samples) {
  auto g = [&](double s) { return std::abs(f(a + s * (b - a))); };
  double best = 0.0;
  int best_i = 0;
  for (int i = 0; i <= samples; ++i) {
    double v = g(static_cast<double>(i) / samples);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  double lo = std::max(0, best_i - 1) / static_cast<double>(samples);
  double hi = std::min(samples, best_i + 1) / static_cast<double>(samples);
  return std::max(best, detail::golden_section_max(g, lo, hi, 1e-13).value);
}

void classify_shape(NumericalRangeBoundary& b) {
  const auto& q = b.points;
  Complex mean = 0.0;
  for (const auto& z : q) mean += z;
  mean /= static_cast<double>(q.size());
  b.center = mean;

  double spread = 0.0;
  for (const auto& z : q) spread = std::max(spread, std::abs(z - mean));
  if (spread <= 1e-10 * (1.0 + b.norm)) {
    b.shape = RangeShape::Point;
    b.segment_a = b.segment_b = mean;
    return;
  }

  // Principal direction of the point cloud.
  Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
  for (const auto& z : q) {
    Eigen::Vector2d d(z.real() - mean.real(), z.imag() - mean.imag());
    cov += d * d.transpose();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(cov);
  Eigen::Vector2d dir = es.eigenvectors().col(1);
  Complex u(dir(0), dir(1));

  double tmin = 0.0, tmax = 0.0, off = 0.0;
  for (const auto& z : q) {
    Complex rel = (z - mean) * std::conj(u);
    tmin = std::min(tmin, rel.real());
    tmax = std::max(tmax, rel.real());
    off = std::max(off, std::abs(rel.imag()));
  }
  if (off <= 1e-10) {
    b.shape = RangeShape::Segment;
    b.segment_a = mean + tmin * u;
    b.segment_b = mean + tmax * u;
  } else {
    b.shape = RangeShape::Region;
  }
}

}  // namespace

SupportPoint support_function(const ComplexMatrix& a, double theta) {
  const Complex rot = std::polar(1.0, theta);
  Matrix h = 0.5 * (rot * a.mat() + std::conj(rot) * a.mat().adjoint());
  auto top = hermitian_top_eigenpair_unchecked(h);
  Complex q = top.x.dot(a.mat() * top.x);  // x* A x
  return {top.lambda, std::move(top.x), q};
}

NumericalRangeBoundary boundary(const ComplexMatrix& a, int m) {
  if (m < kMinResolution)
    throw std::invalid_argument("boundary resolution must be at least 16");
  NumericalRangeBoundary b{.matrix = a, .norm = operator_norm(a)};
  b.angles.resize(m);
  b.support.resize(m);
  b.points.resize(m);
  for (int k = 0; k < m; ++k) {
    const double theta = kTwoPi * k / m;
    auto sp = support_function(a, theta);
    b.angles[k] = theta;
    b.support[k] = sp.h;
    b.points[k] = sp.point;
  }
  classify_shape(b);
  return b;
}

bool contains_point(const NumericalRangeBoundary& b, Complex z) {
  const double tol = b.tolerance();
  for (std::size_t k = 0; k < b.angles.size(); ++k) {
    if ((std::polar(1.0, b.angles[k]) * z).real() > b.support[k] + tol) return false;
  }
  return true;
}

double sup_abs_on_range(const ScalarFunction& f, const NumericalRangeBoundary& b) {
  if (b.shape == RangeShape::Point) return std::abs(f(b.center));
  if (b.shape == RangeShape::Segment)
    return sup_on_segment(f, b.segment_a, b.segment_b, kSegmentSamples);

  const auto& q = b.points;
  const int m = b.resolution();
  std::vector<double> g(m);
  double best = 0.0;
  double perimeter = 0.0;
  for (int k = 0; k < m; ++k) {
    g[k] = std::abs(f(q[k]));
    best = std::max(best, g[k]);
    perimeter += std::abs(q[(k + 1) % m] - q[k]);
  }

  // Long chords are flat faces of W(A) (or sit inside it): maximize along them.
  const double long_chord = 4.0 * perimeter / m;
  for (int k = 0; k < m; ++k) {
    const Complex a = q[k], c = q[(k + 1) % m];
    if (std::abs(c - a) > long_chord)
      best = std::max(best, sup_on_segment(f, a, c, kChordSamples));
  }

  // Golden-section refinement in the angle around the largest local maxima.
  std::vector<int> maxima;
  for (int k = 0; k < m; ++k) {
    if (g[k] >= g[(k + m - 1) % m] && g[k] >= g[(k + 1) % m]) maxima.push_back(k);
  }
  std::sort(maxima.begin(), maxima.end(), [&](int i, int j) { return g[i] > g[j]; });
  if (static_cast<int>(maxima.size()) > kRefinedMaxima) maxima.resize(kRefinedMaxima);

  const double step = kTwoPi / m;
  auto along_boundary = [&](double theta) {
    return std::abs(f(support_function(b.matrix, theta).point));
  };
  for (int k : maxima) {
    const double theta = b.angles[k];
    auto r = detail::golden_section_max(along_boundary, theta - step, theta + step, 1e-10);
    best = std::max(best, r.value);
  }
  return best;
}

double sup_abs_adaptive(const ScalarFunction& f, const ComplexMatrix& a, int m0) {
  int m = std::max(m0, kMinResolution);
  double prev = sup_abs_on_range(f, boundary(a, m));
  for (int cap = 16 * m; m < cap;) {
    m *= 2;
    double next = sup_abs_on_range(f, boundary(a, m));
    if (std::abs(next - prev) < 1e-9 * (1.0 + next)) return std::max(prev, next);
    prev = next;
  }
  return prev;
}

double numerical_radius(const NumericalRangeBoundary& b) {
  double r = 0.0;
  for (const auto& q : b.points) r = std::max(r, std::abs(q));
  return r;
}

void write_boundary_csv(std::ostream& os, const NumericalRangeBoundary& b) {
  const auto old_precision = os.precision(17);
  os << "theta,h,re_q,im_q\n";
  for (std::size_t k = 0; k < b.angles.size(); ++k) {
    os << b.angles[k] << ',' << b.support[k] << ',' << b.points[k].real() << ','
       << b.points[k].imag() << '\n';
  }
  os.precision(old_precision);
}

}  // namespace crouzeix
