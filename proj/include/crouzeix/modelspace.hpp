// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "crouzeix/linalg.hpp"
#include "crouzeix/matrix.hpp"
#include "crouzeix/numrange.hpp"

namespace crouzeix {

inline constexpr int kDefaultQuadrature = 4096;

/// Inner function theta: z^n or a finite Blaschke product with distinct zeros.
class InnerFunctionSpec {
 public:
  enum class Kind { Monomial, Blaschke };

  /// Throws std::invalid_argument for n < 1.
  static InnerFunctionSpec monomial(int n);
  /// Throws std::invalid_argument for an empty list or |a| > 1 - 1e-10, and
  /// ZerosTooClose when two zeros are closer than 1e-8.
  static InnerFunctionSpec blaschke(std::vector<Complex> zeros);

  Kind kind() const { return kind_; }
  int dim() const { return kind_ == Kind::Monomial ? n_ : static_cast<int>(zeros_.size()); }
  const std::vector<Complex>& zeros() const { return zeros_; }

  Complex operator()(Complex z) const;

 private:
  InnerFunctionSpec(Kind kind, int n, std::vector<Complex> zeros)
      : kind_(kind), n_(n), zeros_(std::move(zeros)) {}

  Kind kind_;
  int n_;
  std::vector<Complex> zeros_;
};

/// Orthonormal basis of the model space K_theta. Monomial: 1, z, ...,
/// z^{n-1}. Blaschke: Takenaka-Malmquist functions
/// b_k(z) = sqrt(1 - |a_k|^2) / (1 - conj(a_k) z) prod_{j<k} (z - a_j) / (1 - conj(a_j) z),
/// the Gram-Schmidt orthonormalization of the kernels k_{a_1}, k_{a_2}, ...
/// up to unimodular factors.
class ModelSpaceBasis {
 public:
  explicit ModelSpaceBasis(InnerFunctionSpec spec) : spec_(std::move(spec)) {}

  const InnerFunctionSpec& spec() const { return spec_; }
  int dim() const { return spec_.dim(); }
  Complex evaluate(int k, Complex z) const;

 private:
  InnerFunctionSpec spec_;
};

/// Fourier coefficients g^(k) for k = kmin, ..., kmin + len - 1.
class TrigSymbol {
 public:
  /// Throws std::invalid_argument on an empty coefficient list.
  TrigSymbol(int kmin, std::vector<Complex> coeffs);

  int kmin() const { return kmin_; }
  int kmax() const { return kmin_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex coefficient(int k) const;

  /// Value at a point of the unit circle.
  Complex operator()(Complex zeta) const;
  /// Symbol with coefficients conj(g^(-k)), i.e. the conjugate function.
  TrigSymbol conjugate() const;
  double max_abs_on_circle(int samples = kDefaultQuadrature) const;

 private:
  int kmin_;
  std::vector<Complex> coeffs_;
};

struct NumrangeMatch {
  double hausdorff = 0.0;  // max support-function deviation
  bool match = false;
};

/// (1/N) sum f(zeta_k) conj(g(zeta_k)) over N equally spaced circle points.
Complex boundary_inner_product(const ScalarFunction& f, const ScalarFunction& g, int nodes);

/// G(i, j) = <b_j, b_i> by boundary quadrature.
Matrix gram_matrix(const ModelSpaceBasis& basis, int nodes = kDefaultQuadrature);

/// Matrix of the compression of multiplication by g: M(i, j) = <g b_j, b_i>,
/// starting at `nodes` and doubling until successive results agree to 1e-10.
ComplexMatrix tto_quadrature(const ScalarFunction& g, const ModelSpaceBasis& basis,
                             int nodes = kDefaultQuadrature);

/// Subdiagonal ones: the compressed shift on span{1, ..., z^{n-1}}.
ComplexMatrix monomial_compressed_shift(int n);

/// Toeplitz matrix M(i, j) = g^(i - j).
ComplexMatrix tto_monomial(const TrigSymbol& g, int n);

/// Throws ZerosTooClose or std::invalid_argument like InnerFunctionSpec::blaschke.
ModelSpaceBasis takenaka_malmquist_basis(std::vector<Complex> zeros);

/// <z b_j, b_i> by quadrature. Throws std::invalid_argument for a monomial
/// basis.
ComplexMatrix compressed_shift_blaschke(const ModelSpaceBasis& basis);

/// Compressed shift for either kind of model space.
ComplexMatrix compressed_shift(const ModelSpaceBasis& basis);

/// p(S) for the compressed shift S.
ComplexMatrix tto_analytic(const Polynomial& p, const ModelSpaceBasis& basis);

/// Analytic part through tto_analytic plus the adjoint of the analytic TTO of
/// the conjugated negative-frequency part.
ComplexMatrix tto_trig(const TrigSymbol& g, const ModelSpaceBasis& basis);

/// Conjugation-fixed orthonormal basis of span{1, ..., z^{n-1}} for
/// C f = z^{n-1} conj(f): columns (z^k + z^{n-1-k})/sqrt2, i (z^k - z^{n-1-k})/sqrt2,
/// and the middle monomial for odd n.
Matrix conjugation_basis(int n);

/// V* M V in the conjugation-fixed basis, a complex symmetric matrix unitarily
/// equivalent to M. Throws NotToeplitz if M is not Toeplitz to 1e-10, and
/// std::invalid_argument unless `spec` is monomial of dimension M.n().
ComplexMatrix creal_symmetric_representation(const ComplexMatrix& m,
                                             const InnerFunctionSpec& spec);

/// Compares support functions on m angles; match iff the largest deviation is
/// at most 1e-6 (1 + max(|A|, |B|)).
NumrangeMatch numrange_match_report(const ComplexMatrix& a, const ComplexMatrix& b,
                                    int m = kDefaultResolution);

}  // namespace crouzeix
