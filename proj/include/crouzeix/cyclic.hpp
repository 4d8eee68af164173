// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "crouzeix/matrix.hpp"
#include "crouzeix/numrange.hpp"

namespace crouzeix {

/// Default Krylov rank tolerance, 1e-10 n.
double krylov_tolerance(int n);

/// Orthonormal basis of span{y, Ay, A^2 y, ...}.
struct KrylovBasis {
  Matrix q;  // n x dim, orthonormal columns
  int dim = 0;
  Vector generator;
};

struct CyclicCertificate {
  Vector extremal_vector;
  int krylov_dim = 0;
  double norm_fA = 0.0;
  double norm_f_compressed = 0.0;  // |f(A_V)| for the Krylov space V of the vector
  bool norms_equal = false;
  bool certifies = false;
  int candidates = 0;  // top singular vectors examined
};

/// Arnoldi with two-pass Gram-Schmidt. Stops once the new direction's
/// orthogonal component drops to tol |A| (tol < 0 selects krylov_tolerance).
/// Throws ZeroVector for y = 0.
KrylovBasis krylov_subspace(const ComplexMatrix& a, const Vector& y, double tol = -1.0);

bool is_cyclic_vector(const ComplexMatrix& a, const Vector& y);

/// Monic polynomial of least degree k with |m(A)| <= tol (1 + |A|)^k, from a
/// least-squares dependency among vec(I), vec(A), ..., vec(A^k).
Polynomial minimal_polynomial(const ComplexMatrix& a, double tol = 1e-8);

/// deg(minimal polynomial) == n, cross-checked against the Krylov dimension
/// of a fixed pseudo-random vector. Throws NumericallyAmbiguous when the two
/// tests disagree.
bool is_cyclic_matrix(const ComplexMatrix& a);

/// Q* A Q.
ComplexMatrix compress(const ComplexMatrix& a, const KrylovBasis& basis);
ComplexMatrix compress(const ComplexMatrix& a, const Matrix& q);

/// Extremal-vector certificate: the Krylov space V of a top right singular
/// vector of f(A) is A-invariant, so |f(A)| = |f(A_V)|; when dim V <= 2 the
/// 2x2 case settles A. Every right singular vector within 1e-10 of sigma_max
/// is tried. Throws std::invalid_argument when f vanishes on W(A).
CyclicCertificate maincor_certificate(const ComplexMatrix& a, const Polynomial& f,
                                      int m = kDefaultResolution);

/// Random unit vector cyclic for A, up to 8 seeded attempts. Throws NotCyclic.
Vector find_cyclic_vector(const ComplexMatrix& a, std::uint64_t seed);

}  // namespace crouzeix
