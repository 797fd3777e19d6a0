/*
 * Copyright 2026 The rclkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "generators.hpp"
#include "rclkit/errors.hpp"
#include "rclkit/opcore.hpp"

namespace rclkit {
namespace {

using testing::Rng;

CMatrix unit(Eigen::Index n, Eigen::Index k) {
  CMatrix e = CMatrix::Zero(n, 1);
  e(k, 0) = 1.0;
  return e;
}

TEST(SpectralNorm, Identity) {
  EXPECT_NEAR(spectral_norm(CMatrix::Identity(3, 3)), 1.0, 1e-15);
}

TEST(SpectralNorm, Zero) { EXPECT_EQ(spectral_norm(CMatrix::Zero(2, 2)), 0.0); }

TEST(SpectralNorm, TallColumnMatchesClosedForm) {
  CMatrix m(2, 2);
  m << 3.0, 0.0, 4.0, 0.0;
  EXPECT_NEAR(testing::norm_2x2_closed_form(m), 5.0, 1e-14);
  EXPECT_NEAR(spectral_norm(m), 5.0, 1e-14);
}

TEST(SpectralNorm, RandomTwoByTwoAgainstClosedForm) {
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const CMatrix m = testing::random_matrix(rng, 2, 2);
    EXPECT_NEAR(spectral_norm(m), testing::norm_2x2_closed_form(m), 1e-12);
  }
}

TEST(SpectralNorm, EmptyIsZero) {
  EXPECT_EQ(spectral_norm(CMatrix(0, 3)), 0.0);
  EXPECT_EQ(spectral_norm(CMatrix(4, 0)), 0.0);
}

TEST(Defect, ZeroOperator) {
  const Defect d = defect(CMatrix::Zero(2, 2));
  EXPECT_LT((d.op - CMatrix::Identity(2, 2)).norm(), 1e-15);
  EXPECT_EQ(d.space.dim(), 2);
}

TEST(Defect, UnitaryHasZeroDefect) {
  Rng rng(3);
  const Defect d = defect(testing::random_unitary(rng, 3));
  EXPECT_EQ(d.op.norm(), 0.0);
  EXPECT_EQ(d.space.dim(), 0);
}

TEST(Defect, Scalar) {
  CMatrix n(1, 1);
  n << 0.5;
  const Defect d = defect(n);
  EXPECT_NEAR(std::abs(d.op(0, 0) - std::sqrt(3.0) / 2.0), 0.0, 1e-15);
}

TEST(Defect, RejectsNonContraction) {
  EXPECT_THROW(defect(2.0 * CMatrix::Identity(2, 2)), NotAContraction);
}

TEST(Defect, EmptyMaps) {
  EXPECT_EQ(defect(CMatrix(0, 3)).space.dim(), 3);
  EXPECT_EQ(defect(CMatrix(3, 0)).space.dim(), 0);
}

TEST(Defect, SquareIsDefectAndSelfAdjoint) {
  Rng rng(5);
  for (int i = 0; i < 40; ++i) {
    const int r = testing::uniform_int(rng, 1, 6);
    const int c = testing::uniform_int(rng, 1, 6);
    const double nrm = i % 4 == 0 ? 1.0 : testing::uniform_real(rng, 0.1, 0.99);
    const CMatrix n = testing::random_contraction(rng, r, c, nrm);
    const Defect d = defect(n);
    const CMatrix target = CMatrix::Identity(c, c) - n.adjoint() * n;
    EXPECT_LE(spectral_norm(d.op * d.op - target), 1e-10);
    EXPECT_LE(spectral_norm(d.op - d.op.adjoint()), 1e-14);
  }
}

TEST(RangeClosure, Zero) {
  EXPECT_EQ(range_closure_basis(CMatrix::Zero(3, 2)).dim(), 0);
}

TEST(RangeClosure, DiagonalPicksFirstAxis) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = 1.0;
  const SubspaceBasis s = range_closure_basis(m);
  ASSERT_EQ(s.dim(), 1);
  EXPECT_NEAR(std::abs(s.basis()(0, 0)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(s.basis()(1, 0)), 0.0, 1e-15);
}

TEST(RangeClosure, RankTwoProduct) {
  Rng rng(17);
  const CMatrix m =
      testing::random_matrix(rng, 4, 2) * testing::random_matrix(rng, 2, 3);
  EXPECT_EQ(testing::svd_rank(m), 2);
  EXPECT_EQ(range_closure_basis(m).dim(), 2);
}

TEST(RangeClosure, DimensionOfMMatchesMMStar) {
  Rng rng(19);
  for (int i = 0; i < 30; ++i) {
    const int r = testing::uniform_int(rng, 1, 8);
    const int c = testing::uniform_int(rng, 1, 8);
    const int k = testing::uniform_int(rng, 0, std::min(r, c));
    const CMatrix m =
        testing::random_matrix(rng, r, k) * testing::random_matrix(rng, k, c);
    EXPECT_EQ(range_closure_basis(m).dim(),
              range_closure_basis(m * m.adjoint()).dim());
    EXPECT_EQ(range_closure_basis(m).dim(), testing::svd_rank(m));
  }
}

TEST(RangeClosure, ScaleInvariant) {
  Rng rng(23);
  const CMatrix m =
      testing::random_matrix(rng, 5, 2) * testing::random_matrix(rng, 2, 5);
  EXPECT_EQ(range_closure_basis(1e-8 * m).dim(), 2);
  EXPECT_EQ(range_closure_basis(1e8 * m).dim(), 2);
}

TEST(KernelBasis, ComplementsRowSpace) {
  Rng rng(29);
  const CMatrix m =
      testing::random_matrix(rng, 3, 2) * testing::random_matrix(rng, 2, 5);
  const SubspaceBasis k = kernel_basis(m);
  EXPECT_EQ(k.dim(), 3);
  EXPECT_LT(spectral_norm(m * k.basis()), 1e-12);
}

TEST(Coisometry, UnitRow) {
  CMatrix m(1, 3);
  m << 0.0, 1.0, 0.0;
  EXPECT_TRUE(is_coisometry(m).holds);
}

TEST(Coisometry, HalfScalarFails) {
  CMatrix m(1, 1);
  m << 0.5;
  const IdentityCheck c = is_coisometry(m);
  EXPECT_FALSE(c.holds);
  EXPECT_NEAR(c.deficiency, 0.75, 1e-15);
}

TEST(Coisometry, NoRowsIsVacuous) {
  EXPECT_TRUE(is_coisometry(CMatrix(0, 3)).holds);
}

TEST(Coisometry, AdjointOfIsometry) {
  Rng rng(31);
  for (int i = 0; i < 30; ++i) {
    const int r = testing::uniform_int(rng, 1, 6);
    const int c = testing::uniform_int(rng, 1, 6);
    const CMatrix m = i % 2 == 0
                          ? testing::random_isometry(rng, std::max(r, c),
                                                     std::min(r, c))
                          : testing::random_contraction(rng, r, c, 0.9);
    EXPECT_EQ(is_coisometry(m).holds, is_isometry(m.adjoint()).holds);
    EXPECT_EQ(is_isometry(m).holds, is_coisometry(m.adjoint()).holds);
  }
}

TEST(PsdOrder, ZeroBelowIdentity) {
  EXPECT_TRUE(psd_order_leq(CMatrix::Zero(3, 3), CMatrix::Identity(3, 3)));
  EXPECT_FALSE(psd_order_leq(CMatrix::Identity(3, 3), CMatrix::Zero(3, 3)));
}

TEST(Join, TwoAxes) {
  const SubspaceBasis a(3, unit(3, 0));
  const SubspaceBasis b(3, unit(3, 1));
  EXPECT_EQ(join(a, b).dim(), 2);
  EXPECT_EQ(join(a, a).dim(), 1);
}

TEST(Orthocomplement, Involution) {
  Rng rng(37);
  for (int dim = 0; dim <= 5; ++dim) {
    const SubspaceBasis s = testing::random_subspace(rng, 5, dim);
    const SubspaceBasis c = orthocomplement(s);
    EXPECT_EQ(c.dim(), 5 - dim);
    EXPECT_LT(spectral_norm(s.basis().adjoint() * c.basis()), 1e-12);
    EXPECT_LT(spectral_norm(orthocomplement(c).projector() - s.projector()),
              1e-10);
  }
}

TEST(SubspaceBasis, RejectsNonOrthonormal) {
  CMatrix b(2, 1);
  b << 1.0, 1.0;
  EXPECT_THROW(SubspaceBasis(2, b), InvalidInput);
}

TEST(Contraction, SlackBoundary) {
  const Tolerances tol;
  const CMatrix m = (1.0 + 0.5 * tol.contraction_slack) * CMatrix::Identity(2, 2);
  EXPECT_TRUE(is_contraction(m, tol));
  EXPECT_FALSE(is_contraction(1.01 * CMatrix::Identity(2, 2), tol));
  EXPECT_THROW(require_contraction(1.01 * CMatrix::Identity(2, 2), tol, "M"),
               NotAContraction);
}

TEST(RequireFinite, RejectsNan) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(1, 1) = std::nan("");
  EXPECT_THROW(require_finite(m, "M"), InvalidInput);
}

TEST(Stacking, EmptyBlocks) {
  const CMatrix top(0, 3);
  const CMatrix bottom = CMatrix::Ones(2, 3);
  EXPECT_EQ(vstack(top, bottom).rows(), 2);
  EXPECT_EQ(hstack(CMatrix(2, 0), bottom).cols(), 3);
  EXPECT_THROW(vstack(CMatrix(1, 2), bottom), DimensionMismatch);
}

}  // namespace
}  // namespace rclkit
