// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <vector>

#include "crouzeix/linalg.hpp"
#include "crouzeix/matrix.hpp"

namespace crouzeix {

inline constexpr int kDefaultResolution = 1024;
inline constexpr int kMinResolution = 16;

/// Shape classification of a sampled numerical range.
enum class RangeShape { Region, Segment, Point };

struct SupportPoint {
  double h = 0.0;     // support value in direction theta
  Vector x;           // unit top eigenvector of the rotated Hermitian part
  Complex point;      // <A x, x>, a boundary point of W(A)
};

/// Sampled boundary of the numerical range W(A) on a uniform angle grid.
///
/// Keeps a copy of A so that queries can refine between grid angles.
struct NumericalRangeBoundary {
  ComplexMatrix matrix;
  double norm = 0.0;  // |A|
  std::vector<double> angles{};
  std::vector<double> support{};
  std::vector<Complex> points{};

  RangeShape shape = RangeShape::Region;
  Complex center{};                  // mean boundary point
  Complex segment_a{}, segment_b{};  // endpoints when shape == Segment

  int resolution() const { return static_cast<int>(angles.size()); }
  /// Absolute membership tolerance 1e-9 (1 + |A|).
  double tolerance() const { return 1e-9 * (1.0 + norm); }
};

/// h(theta) = lambda_max((e^{i theta} A + e^{-i theta} A*)/2).
SupportPoint support_function(const ComplexMatrix& a, double theta);

/// Samples W(A) at m >= 16 equally spaced angles in [0, 2 pi).
NumericalRangeBoundary boundary(const ComplexMatrix& a, int m = kDefaultResolution);

/// Outer-polygon membership: Re(e^{i theta_k} z) <= h(theta_k) + tol for all k.
bool contains_point(const NumericalRangeBoundary& b, Complex z);

/// max |f| over W(A). Grid maximum, refined along long boundary chords (flat
/// faces) and by golden-section search in the angle around the best grid
/// nodes. Point and segment ranges are maximized over the degenerate set.
/// f must be analytic near W(A).
double sup_abs_on_range(const ScalarFunction& f, const NumericalRangeBoundary& b);

/// sup_abs_on_range with the resolution doubled from m0 until two successive
/// values differ by less than 1e-9 (relative to 1 + value), capped at 16 m0.
double sup_abs_adaptive(const ScalarFunction& f, const ComplexMatrix& a,
                        int m0 = kDefaultResolution);

/// Numerical radius max |q| over the sampled boundary points.
double numerical_radius(const NumericalRangeBoundary& b);

/// CSV with header "theta,h,re_q,im_q", one row per sampled angle.
void write_boundary_csv(std::ostream& os, const NumericalRangeBoundary& b);

}  // namespace crouzeix
