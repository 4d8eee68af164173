// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "crouzeix/classes.hpp"
#include "crouzeix/crouzeix.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace crouzeix;
using fixtures::diag;
using fixtures::kI;
using fixtures::mat;
using fixtures::unit;

namespace {

// Largest entry outside the leading k x k block.
double off_block(const Matrix& b, int k) {
  double m = 0.0;
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      if (i >= k || j >= k) m = std::max(m, std::abs(b(i, j)));
  return m;
}

double support_gap(const ComplexMatrix& a, const ComplexMatrix& b, int m) {
  double gap = 0.0;
  for (int k = 0; k < m; ++k) {
    const double theta = 2 * std::numbers::pi * k / m;
    gap = std::max(gap, std::abs(support_function(a, theta).h - support_function(b, theta).h));
  }
  return gap;
}

}  // namespace

TEST(AffineTransform, Examples) {
  const Matrix a = affine_transform(ComplexMatrix::identity(3), 2.0, kI).mat();
  EXPECT_EQ(oracle::max_abs_diff(a, Complex(2.0, 1.0) * Matrix::Identity(3, 3)), 0.0);
  oracle::Rng rng(51);
  const auto r = oracle::random_matrix(4, rng);
  EXPECT_EQ(oracle::max_abs_diff(affine_transform(r, 1.0, 0.0).mat(), r.mat()), 0.0);
  EXPECT_EQ(oracle::max_abs_diff(affine_transform(jordan_nilpotent(2), 0.0, 3.0).mat(),
                                 3.0 * Matrix::Identity(2, 2)),
            0.0);
}

TEST(DirectSum, Examples) {
  const std::vector<ComplexMatrix> scalars{diag({1.0}), diag({2.0})};
  EXPECT_EQ(oracle::max_abs_diff(direct_sum(scalars).mat(), diag({1.0, 2.0}).mat()), 0.0);

  const std::vector<ComplexMatrix> jz{jordan_nilpotent(2), diag({0.0})};
  const Matrix s = direct_sum(jz).mat();
  Matrix e12 = Matrix::Zero(3, 3);
  e12(0, 1) = 1.0;
  EXPECT_EQ(oracle::max_abs_diff(s, e12), 0.0);
  EXPECT_THROW(direct_sum(std::vector<ComplexMatrix>{}), std::invalid_argument);
}

TEST(DirectSum, NormIsMaxOfBlockNorms) {
  oracle::Rng rng(52);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ComplexMatrix> blocks;
    const int count = oracle::uniform_int(rng, 1, 4);
    for (int k = 0; k < count; ++k) blocks.push_back(oracle::random_matrix(2, rng));
    const auto p = oracle::random_poly(oracle::uniform_int(rng, 1, 5), rng);
    double want = 0.0;
    for (const auto& b : blocks) want = std::max(want, operator_norm(poly_apply(p, b)));
    const double got = operator_norm(poly_apply(p, direct_sum(blocks)));
    EXPECT_NEAR(got, want, 1e-10 * (1.0 + want));
  }
}

TEST(Kronecker, Examples) {
  oracle::Rng rng(53);
  const auto a = oracle::random_matrix(3, rng);
  const std::vector<ComplexMatrix> aa{a, a};
  EXPECT_EQ(oracle::max_abs_diff(kronecker(ComplexMatrix::identity(2), a).mat(), direct_sum(aa).mat()), 0.0);

  const auto j2 = jordan_nilpotent(2);
  const std::vector<ComplexMatrix> jj{j2, affine_transform(j2, 2.0, 0.0)};
  EXPECT_EQ(oracle::max_abs_diff(kronecker(diag({1.0, 2.0}), j2).mat(), direct_sum(jj).mat()), 0.0);

  for (int trial = 0; trial < 20; ++trial) {
    const auto m = oracle::random_matrix(oracle::uniform_int(rng, 1, 3), rng);
    const auto n = oracle::random_matrix(oracle::uniform_int(rng, 1, 3), rng);
    const double lhs = operator_norm(kronecker(m, n)), rhs = operator_norm(kronecker(n, m));
    EXPECT_NEAR(lhs, rhs, 1e-10 * lhs);
    EXPECT_NEAR(lhs, operator_norm(m) * operator_norm(n), 1e-10 * lhs);
  }
}

TEST(NormalTensorReduce, Examples) {
  oracle::Rng rng(54);
  const auto a = oracle::random_matrix(3, rng);
  const auto id = normal_tensor_reduce(ComplexMatrix::identity(2), a);
  ASSERT_EQ(id.blocks.size(), 2u);
  for (const auto& b : id.blocks) EXPECT_LE(oracle::max_abs_diff(b.mat(), a.mat()), 1e-14);
  EXPECT_LE(id.residual, 1e-12);

  const auto d = normal_tensor_reduce(diag({1.0, 2.0 * kI}), a);
  ASSERT_EQ(d.blocks.size(), 2u);
  EXPECT_LE(oracle::max_abs_diff(d.blocks[0].mat(), a.mat()), 1e-14);
  EXPECT_LE(oracle::max_abs_diff(d.blocks[1].mat(), 2.0 * kI * a.mat()), 1e-14);

  EXPECT_THROW(normal_tensor_reduce(jordan_nilpotent(2), a), NotNormal);
}

TEST(NormalTensorReduce, ConjugationResidualOracle) {
  oracle::Rng rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix n(oracle::random_unitary(3, rng));
    const auto a = oracle::random_matrix(oracle::uniform_int(rng, 1, 4), rng);
    const auto r = normal_tensor_reduce(n, a);
    EXPECT_LE(r.residual, 1e-9 * operator_norm(n) * operator_norm(a));
    // Recompute the residual independently from U.
    const ComplexMatrix u(r.u);
    const Matrix ui = kronecker(u, ComplexMatrix::identity(a.n())).mat();
    const Matrix lhs = ui.adjoint() * kronecker(n, a).mat() * ui;
    EXPECT_LE(oracle::max_abs_diff(lhs, direct_sum(r.blocks).mat()), 1e-9 * operator_norm(a));
    EXPECT_LE((r.u.adjoint() * r.u - Matrix::Identity(3, 3)).norm(), 1e-12);
  }
}

TEST(NormalTensorReduce, RatioBoundedByBlocks) {
  oracle::Rng rng(56);
  for (int trial = 0; trial < 15; ++trial) {
    const auto n = oracle::random_normal(oracle::uniform_int(rng, 1, 3), rng);
    const auto a = oracle::random_matrix(oracle::uniform_int(rng, 1, 3), rng);
    const auto p = oracle::random_poly(oracle::uniform_int(rng, 1, 3), rng);
    const auto r = normal_tensor_reduce(n, a);
    double block_max = 0.0;
    for (const auto& b : r.blocks) {
      const auto rb = crouzeix_ratio(b, p);
      block_max = std::max(block_max, rb.ratio);
      EXPECT_TRUE(rb.passes);
    }
    EXPECT_LE(crouzeix_ratio(kronecker(n, a), p).ratio, block_max + 1e-8);
  }
}

TEST(RankOneCanonical, Examples) {
  const auto c = rank_one_canonical({unit(3, 0), unit(3, 1)});
  EXPECT_EQ(c.block, 2);
  EXPECT_LE(off_block(c.b.mat(), 2), 1e-12);
  EXPECT_NEAR(operator_norm(c.b), 1.0, 1e-14);
  // Leading block is nilpotent with norm 1, i.e. J_2 up to unitary freedom.
  EXPECT_LE((c.b.mat() * c.b.mat()).norm(), 1e-14);

  const auto p = rank_one_canonical({unit(3, 0), unit(3, 0)});
  EXPECT_EQ(p.block, 1);
  EXPECT_LE(off_block(p.b.mat(), 1), 1e-12);
  EXPECT_NEAR(std::abs(p.b(0, 0) - 1.0), 0.0, 1e-14);
}

TEST(RankOneCanonical, RandomResidualSupportAndRange) {
  oracle::Rng rng(57);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = oracle::uniform_int(rng, 2, 6);
    const RankOneSpec spec{oracle::random_vector(n, rng), oracle::random_vector(n, rng)};
    const auto c = rank_one_canonical(spec);
    const double scale = spec.u.norm() * spec.v.norm();
    EXPECT_LE((c.u.adjoint() * c.u - Matrix::Identity(n, n)).norm(), 1e-12);
    EXPECT_LE(oracle::max_abs_diff(c.u * spec.matrix() * c.u.adjoint(), c.b.mat()), 1e-10 * scale);
    EXPECT_LE(off_block(c.b.mat(), 2), 1e-12 * scale);
    EXPECT_LE(support_gap(ComplexMatrix(spec.matrix()), c.b, 64), 1e-9 * (1.0 + scale));
  }
}

TEST(JordanNilpotent, ShapeAndNilpotency) {
  EXPECT_EQ(oracle::max_abs_diff(jordan_nilpotent(2).mat(), mat({{0, 1}, {0, 0}})), 0.0);
  const Matrix j3 = jordan_nilpotent(3).mat();
  EXPECT_EQ(oracle::max_abs_diff(j3, mat({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})), 0.0);
  for (int n = 1; n <= 7; ++n) {
    const auto j = jordan_nilpotent(n);
    for (int k = 1; k < n; ++k) EXPECT_NEAR(operator_norm(poly_apply(Polynomial::monomial(k), j)), 1.0, 1e-14);
    EXPECT_EQ(operator_norm(poly_apply(Polynomial::monomial(n), j)), 0.0);
  }
  EXPECT_THROW(jordan_nilpotent(0), std::invalid_argument);
}

TEST(PaperExample, DisplayAndWindow) {
  EXPECT_EQ(oracle::max_abs_diff(paper_example(0.0).mat(), jordan_nilpotent(3).mat()), 0.0);
  const double lo = 1.0 - 1.0 / std::sqrt(3.0), hi = std::sqrt(3.0) - 1.0;
  const Matrix a = paper_example(lo).mat();
  EXPECT_NEAR(std::abs(a(0, 1) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(a(1, 2) - 1.0 / std::sqrt(3.0)), 0.0, 1e-15);
  EXPECT_TRUE(paper_example_in_window(lo));
  EXPECT_TRUE(paper_example_in_window(hi));
  EXPECT_TRUE(paper_example_in_window(0.5));
  EXPECT_FALSE(paper_example_in_window(0.3));
  EXPECT_FALSE(paper_example_in_window(0.8));
}

TEST(PaperExample, WindowIsWhereZBeatsZSquared) {
  // The window is exactly where ratio(z) >= ratio(z^2); outside it z^2 wins.
  const double lo = 1.0 - 1.0 / std::sqrt(3.0), hi = std::sqrt(3.0) - 1.0;
  for (double t : {0.3, 0.35, 0.4, 0.45, 0.5, 0.6, 0.7}) {
    const auto b = boundary(paper_example(t), 2048);
    const double r1 = crouzeix_ratio(b, Polynomial::monomial(1)).ratio;
    const double r2 = crouzeix_ratio(b, Polynomial::monomial(2)).ratio;
    if (t >= lo && t <= hi) {
      EXPECT_GE(r1, r2) << "t = " << t;
    } else {
      EXPECT_LT(r1, r2) << "t = " << t;
    }
  }
}

TEST(BorderAugment, Examples) {
  const auto seg = border_augment(diag({1.0, -1.0}), 0.0);
  EXPECT_TRUE(seg.d_in_range);
  EXPECT_EQ(seg.matrix.n(), 3);
  EXPECT_LE(support_gap(seg.matrix, diag({1.0, -1.0}), 64), 1e-12);

  const auto j2 = jordan_nilpotent(2);
  const auto inside = border_augment(j2, 0.25);
  EXPECT_TRUE(inside.d_in_range);
  EXPECT_LE(support_gap(inside.matrix, j2, 128), 1e-8);

  const auto outside = border_augment(j2, 5.0);
  EXPECT_FALSE(outside.d_in_range);
  EXPECT_GT(support_gap(outside.matrix, j2, 128), 1.0);
}

TEST(BorderAugment, InteriorPointRatioIdentity) {
  // |p(A (+) [d])| = max(|p(A)|, |p(d)|) and W is unchanged, so the ratio
  // becomes max(ratio(A), |p(d)| / sup): never above max(ratio(A), 1).
  oracle::Rng rng(58);
  for (int trial = 0; trial < 15; ++trial) {
    const auto a = oracle::random_matrix(oracle::uniform_int(rng, 2, 4), rng);
    // A convex combination of boundary points lies in W(A).
    const auto b = boundary(a, 64);
    const Complex d = 0.5 * b.points[oracle::uniform_int(rng, 0, 63)] +
                      0.5 * b.points[oracle::uniform_int(rng, 0, 63)];
    const auto aug = border_augment(a, d);
    EXPECT_TRUE(aug.d_in_range);
    for (const auto& p : oracle::random_suite(4, 4, rng)) {
      const auto ra = crouzeix_ratio(a, p);
      const double rb = crouzeix_ratio(aug.matrix, p).ratio;
      EXPECT_NEAR(rb, std::max(ra.ratio, std::abs(p(d)) / ra.sup_f), 1e-7);
      EXPECT_LE(rb, std::max(ra.ratio, 1.0) + 1e-7);
    }
  }
}

TEST(BorderAugment, SelectedPointPreservesRatios) {
  oracle::Rng rng(60);
  for (int trial = 0; trial < 15; ++trial) {
    const auto a = oracle::random_matrix(oracle::uniform_int(rng, 2, 4), rng);
    for (const auto& p : oracle::random_suite(4, 4, rng)) {
      const auto sel = select_border_point(a, p);
      ASSERT_EQ(sel.branch, BorderBranch::PointAvailable);
      const auto aug = border_augment(a, sel.d);
      EXPECT_TRUE(aug.d_in_range);
      EXPECT_NEAR(crouzeix_ratio(aug.matrix, p).ratio, crouzeix_ratio(a, p).ratio, 1e-7);
    }
  }
}

TEST(SelectBorderPoint, EigenvalueQualifies) {
  oracle::Rng rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = oracle::random_matrix(oracle::uniform_int(rng, 1, 5), rng);
    const auto p = oracle::random_poly(oracle::uniform_int(rng, 1, 4), rng);
    const auto s = select_border_point(a, p);
    EXPECT_LE(std::abs(p(s.d)), operator_norm(poly_apply(p, a)) * (1.0 + 1e-10) + 1e-12);
    EXPECT_TRUE(contains_point(boundary(a, 128), s.d));
  }
}

TEST(BasisMatrix, ExamplesAndRatios) {
  EXPECT_EQ(oracle::max_abs_diff(basis_matrix(1, 2, 2).mat(), mat({{0, 1}, {0, 0}})), 0.0);
  EXPECT_EQ(oracle::max_abs_diff(basis_matrix(1, 1, 3).mat(), diag({1.0, 0.0, 0.0}).mat()), 0.0);
  EXPECT_THROW(basis_matrix(0, 1, 2), std::out_of_range);
  EXPECT_THROW(basis_matrix(1, 3, 2), std::out_of_range);
  for (int n = 1; n <= 3; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const auto r = conjecture_check(basis_matrix(i, j, n), {Polynomial::monomial(1), Polynomial::monomial(2)});
        EXPECT_TRUE(r.all_pass);
      }
}
