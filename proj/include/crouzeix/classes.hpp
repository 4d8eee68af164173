// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "crouzeix/matrix.hpp"
#include "crouzeix/numrange.hpp"

namespace crouzeix {

/// The rank-one operator x -> <x, v> u, i.e. the matrix u v*.
struct RankOneSpec {
  Vector u;
  Vector v;

  Matrix matrix() const { return u * v.adjoint(); }
};

struct TensorReduction {
  std::vector<ComplexMatrix> blocks;  // lambda_i A for the eigenvalues of N
  Matrix u;                           // unitary with U* N U diagonal
  double residual = 0.0;  // |(U x I)* (N x A) (U x I) - blocks_1 + ... |
};

struct RankOneCanonical {
  Matrix u;         // unitary change of basis
  ComplexMatrix b;  // U (u v*) U*, supported on the leading block
  int block = 2;    // 1 when u is parallel to v
};

struct BorderAugmentation {
  ComplexMatrix matrix;  // A (+) [d]
  bool d_in_range = false;
};

/// Which branch of the dimension-monotonicity argument (A, p) falls into.
enum class BorderBranch {
  NormBelowInfimum,  // |p(A)| < inf_{W(A)} |p|
  PointAvailable,    // some d in W(A) has |p(d)| <= |p(A)|
};

struct BorderSelection {
  BorderBranch branch = BorderBranch::PointAvailable;
  Complex d;  // an eigenvalue of A with |p(d)| <= |p(A)|
};

ComplexMatrix affine_transform(const ComplexMatrix& a, Complex mu, Complex lambda);

/// Block-diagonal assembly. Throws std::invalid_argument on an empty list.
ComplexMatrix direct_sum(std::span<const ComplexMatrix> blocks);

ComplexMatrix kronecker(const ComplexMatrix& m, const ComplexMatrix& n);

/// Unitarily reduces N (x) A to the direct sum of lambda_i A. Throws NotNormal
/// if |N N* - N* N| > 1e-10 |N|^2.
TensorReduction normal_tensor_reduce(const ComplexMatrix& n, const ComplexMatrix& a);

/// Orthonormal basis x1 = u/|u|, x2 = (v orthogonalized against u), completed
/// by Householder reflections. Throws ZeroVector on a zero u or v.
RankOneCanonical rank_one_canonical(const RankOneSpec& spec);

/// n x n nilpotent Jordan block (ones on the superdiagonal).
ComplexMatrix jordan_nilpotent(int n);

/// [[0, 1, 0], [0, 0, 1 - t], [0, 0, 0]]. The window
/// 1 - 1/sqrt(3) <= t <= sqrt(3) - 1 is reported by `paper_example_in_window`
/// and not enforced.
ComplexMatrix paper_example(double t);
bool paper_example_in_window(double t);

/// A (+) [d], with membership of d in W(A) recorded (not enforced).
BorderAugmentation border_augment(const ComplexMatrix& a, Complex d,
                                  int m = kDefaultResolution);

/// Constructive choice of d for the dimension-monotonicity argument: an
/// eigenvalue always qualifies since p(lambda) is an eigenvalue of p(A).
BorderSelection select_border_point(const ComplexMatrix& a, const Polynomial& p);

/// e_ij, 1-based. Throws std::out_of_range.
ComplexMatrix basis_matrix(int i, int j, int n);

}  // namespace crouzeix
