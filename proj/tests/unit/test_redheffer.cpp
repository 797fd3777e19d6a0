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

#include "generators.hpp"
#include "oracles.hpp"
#include "rclkit/errors.hpp"
#include "rclkit/redheffer.hpp"

namespace rclkit {
namespace {

using testing::OmegaKind;
using testing::ProblemShape;
using testing::Rng;

InterpProblem coisometric_problem(Rng& rng, int u) {
  return testing::random_problem(rng, ProblemShape{u, 0, u, OmegaKind::Coisometric});
}

TEST(Realize, CoisometricOmegaHasNoDefect) {
  Rng rng(1);
  const RedhefferRealization r = realize(coisometric_problem(rng, 4));
  EXPECT_EQ(r.d_dim(), 0);
  EXPECT_EQ(r.g_dim(), 0);
}

TEST(Realize, BackwardShiftStateOperator) {
  const RedhefferRealization r = realize(testing::backward_shift_example(6));
  CMatrix expected = CMatrix::Zero(6, 6);
  for (int k = 2; k < 6; ++k) expected(k - 1, k) = 1.0;
  EXPECT_EQ(r.z(), expected);
  EXPECT_EQ(r.g_dim(), 1);
  EXPECT_EQ(r.d_dim(), 2);
}

TEST(Realize, BlockCoisometryOnRandomOmega) {
  Rng rng(2);
  for (int t = 0; t < 40; ++t) {
    const RedhefferRealization r = realize(testing::random_problem(rng));
    EXPECT_LE(r.block_coisometry_deficiency(), 1e-9);
    EXPECT_TRUE(is_coisometry(r.as_system().system_matrix()).holds);
  }
}

TEST(PhiEval, AtOrigin) {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const RedhefferRealization r = realize(testing::random_problem(rng));
    const PhiValues v = phi_eval(r, 0.0);
    EXPECT_EQ(v.phi11.norm(), 0.0);
    const InterpProblem& p = r.problem();
    EXPECT_LT(spectral_norm(v.phi22 - p.omega1() * p.f().basis().adjoint()),
              1e-15);
  }
}

TEST(PhiEval, CoisometricOmegaKillsPhi21) {
  Rng rng(4);
  const RedhefferRealization r = realize(coisometric_problem(rng, 3));
  for (const Complex l : {Complex(0.2, 0.1), Complex(-0.5, 0.0), Complex(0.0, 0.7)}) {
    EXPECT_EQ(phi_eval(r, l).phi21.size(), 0);
  }
}

TEST(PhiEval, RejectsPointsOutsideDisc) {
  Rng rng(5);
  const RedhefferRealization r = realize(testing::random_problem(rng));
  EXPECT_THROW(phi_eval(r, 1.0), OutOfDisc);
  EXPECT_THROW(phi_eval(r, Complex(0.8, 0.8)), OutOfDisc);
}

TEST(PhiEval, Phi22IsResolventCentral) {
  Rng rng(6);
  for (int t = 0; t < 20; ++t) {
    const RedhefferRealization r = realize(testing::random_problem(rng));
    const Complex l(0.1, -0.4);
    EXPECT_LT(spectral_norm(phi_eval(r, l).phi22 -
                            testing::central_by_resolvent(r.problem(), l)),
              1e-12);
  }
}

TEST(PhiTaylor, Phi22IsCentral) {
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    const InterpProblem p = testing::random_problem(rng);
    const PhiSeries s = phi_taylor(realize(p), 15);
    const TaylorSeries h = central_taylor(p, 15);
    EXPECT_EQ(series_gap(s.phi22, h, 15, 0.0).max_gap, 0.0);
    EXPECT_EQ(s.phi11[0].norm(), 0.0);
  }
}

TEST(PhiTaylor, HornerMatchesEvaluation) {
  Rng rng(8);
  const int order = 30;
  for (int t = 0; t < 30; ++t) {
    const RedhefferRealization r = realize(testing::random_problem(rng));
    const PhiSeries s = phi_taylor(r, order);
    for (const Complex l : {Complex(0.25, 0.0), Complex(0.0, 0.5), Complex(-0.3, 0.3)}) {
      const PhiValues v = phi_eval(r, l);
      const double bound =
          testing::geometric_tail(1.0, spectral_norm(r.z()), std::abs(l), order - 1) +
          1e-12;
      EXPECT_LE(spectral_norm(s.phi11.evaluate(l) - v.phi11), bound);
      EXPECT_LE(spectral_norm(s.phi12.evaluate(l) - v.phi12), bound);
      EXPECT_LE(spectral_norm(s.phi21.evaluate(l) - v.phi21), bound);
      EXPECT_LE(spectral_norm(s.phi22.evaluate(l) - v.phi22), bound);
    }
  }
}

TEST(PhiTaylor, SystemTransferAndObservability) {
  Rng rng(9);
  const RedhefferRealization r = realize(testing::random_problem(rng));
  const CoisometricSystem sys = r.as_system();
  const PhiSeries s = phi_taylor(r, 10);
  const MatrixSeries f = transfer_taylor(sys, 10);
  const MatrixSeries w = observability_taylor(sys, 10);
  const Eigen::Index g = r.g_dim();
  for (int n = 0; n <= 10; ++n) {
    EXPECT_LT(spectral_norm(f[n].topRows(g) - s.phi11[n]), 1e-14);
    EXPECT_LT(spectral_norm(f[n].bottomRows(f[n].rows() - g) - s.phi21[n]), 1e-14);
    EXPECT_LT(spectral_norm(w[n].topRows(g) - s.phi12[n]), 1e-14);
    EXPECT_LT(spectral_norm(w[n].bottomRows(w[n].rows() - g) - s.phi22[n]), 1e-14);
  }
}

TEST(CoefficientAudit, RandomOmega) {
  Rng rng(10);
  for (const OmegaKind kind : {OmegaKind::Strict, OmegaKind::NormOne, OmegaKind::Isometric}) {
    const RedhefferRealization r =
        realize(testing::random_problem(rng, ProblemShape{5, 2, 3, kind}));
    const CoefficientAuditReport rep = coefficient_matrix_audit(r, 10, 1e-9);
    EXPECT_LT(rep.row_gram_deviation, 1e-9);
  }
}

TEST(CoefficientAudit, SectionLayout) {
  Rng rng(11);
  const RedhefferRealization r =
      realize(testing::random_problem(rng, ProblemShape{4, 2, 2, OmegaKind::Strict}));
  const int blocks = 6;
  const CMatrix m = coefficient_matrix(r, blocks);
  EXPECT_EQ(m.rows(), blocks * (r.g_dim() + 2));
  EXPECT_EQ(m.cols(), blocks * r.d_dim() + 4);
}

TEST(CoefficientAudit, CoisometricOmegaLeavesGammaColumns) {
  Rng rng(12);
  const RedhefferRealization r = realize(coisometric_problem(rng, 3));
  const CMatrix m = coefficient_matrix(r, 8);
  EXPECT_EQ(m.cols(), 3);
  EXPECT_LT(coefficient_matrix_report(r, 8).row_gram_deviation, 1e-9);
}

TEST(CoefficientAudit, EmptyOutputSpace) {
  Rng rng(13);
  const RedhefferRealization r =
      realize(testing::random_problem(rng, ProblemShape{4, 0, 2, OmegaKind::Strict}));
  const CMatrix m = coefficient_matrix(r, 10);
  EXPECT_EQ(m.rows(), 10 * r.g_dim());
  EXPECT_LT(coefficient_matrix_report(r, 10).row_gram_deviation, 1e-9);
}

TEST(CoefficientAudit, HoldsUpToSixteenBlocks) {
  Rng rng(14);
  for (int t = 0; t < 10; ++t) {
    const RedhefferRealization r = realize(testing::random_problem(rng, 5, 2));
    for (int blocks = 1; blocks <= 16; blocks += 5) {
      EXPECT_LT(coefficient_matrix_report(r, blocks).row_gram_deviation, 1e-9);
    }
  }
}

TEST(CoefficientAudit, ColumnDeficiencyDecaysForStableState) {
  Rng rng(15);
  for (int t = 0; t < 5; ++t) {
    const RedhefferRealization r =
        realize(testing::random_problem(rng, ProblemShape{4, 2, 3, OmegaKind::Isometric}));
    const Eigen::VectorXcd eig = Eigen::ComplexEigenSolver<CMatrix>(r.z()).eigenvalues();
    ASSERT_LT(eig.cwiseAbs().maxCoeff(), 1.0 - 1e-3);
    const double first = coefficient_matrix_report(r, 2).column_gram_deviation;
    double previous = first;
    for (int blocks = 4; blocks <= 32; blocks += 2) {
      const double now = coefficient_matrix_report(r, blocks).column_gram_deviation;
      EXPECT_LE(now, previous + 1e-12);
      previous = now;
    }
    EXPECT_LT(previous, 0.5 * first);
  }
}

TEST(CoefficientAudit, PerturbedRealizationFails) {
  Rng rng(16);
  const RedhefferRealization r = realize(testing::random_problem(rng));
  const CoisometricSystem s = r.as_system();
  const auto bad = CoisometricSystem::unchecked(s.a(), s.b(), 1.1 * s.c(), s.d());
  EXPECT_GT(st_identity_report(bad, 10).max_deviation, 1e-2);
}

TEST(LftSolution, ZeroParameterIsCentral) {
  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    const InterpProblem p = testing::random_problem(rng);
    const RedhefferRealization r = realize(p);
    const TaylorSeries h = lft_solution(
        r, SchurParameter::constant(CMatrix::Zero(r.d_dim(), r.g_dim())), 20);
    EXPECT_LE(series_gap(h, central_taylor(p, 20), 20, 0.0).max_gap, 1e-12);
  }
}

TEST(LftSolution, CoisometricOmegaGivesCentralForAnyParameter) {
  Rng rng(18);
  const InterpProblem p = coisometric_problem(rng, 3);
  const RedhefferRealization r = realize(p);
  const TaylorSeries h =
      lft_solution(r, SchurParameter::constant(CMatrix(0, r.g_dim())), 10);
  EXPECT_LE(series_gap(h, central_taylor(p, 10), 10, 0.0).max_gap, 1e-12);
}

TEST(LftSolution, ConstantParametersGiveSolutions) {
  Rng rng(19);
  for (int t = 0; t < 30; ++t) {
    const InterpProblem p = testing::random_problem(rng);
    const RedhefferRealization r = realize(p);
    const double nrm = t % 3 == 0 ? 1.0 : testing::uniform_real(rng, 0.1, 0.99);
    const CMatrix v = testing::random_contraction(rng, r.d_dim(), r.g_dim(), nrm);
    EXPECT_TRUE(is_solution(p, lft_solution(r, SchurParameter::constant(v), 24)).ok());
  }
}

TEST(LftSolution, PolynomialParametersGiveSolutions) {
  Rng rng(20);
  for (int t = 0; t < 10; ++t) {
    const InterpProblem p =
        testing::random_problem(rng, ProblemShape{5, 2, 2, OmegaKind::Strict});
    const RedhefferRealization r = realize(p);
    const CMatrix v0 = testing::random_contraction(rng, r.d_dim(), r.g_dim(), 0.45);
    const CMatrix v1 = testing::random_contraction(rng, r.d_dim(), r.g_dim(), 0.45);
    const SchurParameter v = SchurParameter::polynomial({v0, v1});
    EXPECT_LE(v.contraction_norm(), 0.9 + 1e-12);
    EXPECT_TRUE(is_solution(p, lft_solution(r, v, 24)).ok());
  }
}

TEST(LftSolution, RejectsBadParameters) {
  Rng rng(21);
  const RedhefferRealization r =
      realize(testing::random_problem(rng, ProblemShape{4, 1, 2, OmegaKind::Strict}));
  EXPECT_THROW(lft_solution(r, SchurParameter::constant(CMatrix::Zero(7, 7)), 5),
               InvalidParameter);
  const CMatrix big = 2.0 * CMatrix::Ones(r.d_dim(), r.g_dim());
  EXPECT_THROW(lft_solution(r, SchurParameter::constant(big), 5), InvalidParameter);
}

TEST(SchurParameter, PolynomialNormFromToeplitzSection) {
  const CMatrix half = CMatrix::Constant(1, 1, 0.5);
  const SchurParameter v = SchurParameter::polynomial({half, half});
  EXPECT_LE(v.contraction_norm(), 1.0);
  EXPECT_GT(v.contraction_norm(), 0.98);
  EXPECT_TRUE(SchurParameter::constant(half).is_constant());
}

}  // namespace
}  // namespace rclkit
