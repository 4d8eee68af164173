// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "crouzeix/matrix.hpp"

namespace crouzeix {

/// The entire function z -> <e^{zA} u, v>, stored by its coordinate vector u.
/// Its model-space norm is |u| by definition.
class LiftedFunction {
 public:
  /// Throws std::invalid_argument on a dimension mismatch.
  LiftedFunction(Vector u, ComplexMatrix a, Vector v);

  const Vector& u() const { return u_; }
  const ComplexMatrix& a() const { return a_; }
  const Vector& v() const { return v_; }
  double norm() const { return u_.norm(); }

 private:
  Vector u_;
  ComplexMatrix a_;
  Vector v_;
};

/// <e^{zA} u, v>.
Complex lift_eval(const LiftedFunction& f, Complex z);

/// Differentiation on the model space: the lift of A u.
LiftedFunction diff_apply(const LiftedFunction& f);

struct LiftRank {
  int rank = 0;
  double gram_condition = 0.0;  // condition number of the sampled Gram matrix
};

/// Rank of the functions z -> <e^{zA} e_i, v> sampled at 4n equally spaced
/// points on |z| = 1 / (1 + |A|).
LiftRank lift_injectivity(const ComplexMatrix& a, const Vector& v);

struct ModelNormReport {
  double max_discrepancy = 0.0;  // max relative gap |p(D) u~| vs |p(A) u|
  double model_operator_norm = 0.0;  // |p(D)| on the model space
  double matrix_operator_norm = 0.0; // |p(A)|
  int gram_rank = 0;
  double gram_condition = 0.0;
  int samples = 0;
};

/// Checks the unitary-equivalence bookkeeping between A and differentiation
/// on E_{A,v}: p(D) applied through repeated differentiation of lifts against
/// p(A) u directly, for `samples` seeded random u, plus injectivity of u -> u~.
/// Throws NotCyclic unless v is cyclic for A*, RankDeficientLift when the
/// sampled Gram matrix has rank < n.
ModelNormReport model_norm_check(const ComplexMatrix& a, const Vector& v, const Polynomial& p,
                                 int samples, std::uint64_t seed);

}  // namespace crouzeix
