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

///
/// \file redheffer.hpp
///
/// Redheffer coefficients of the H^2 interpolation problem. With
/// Z = omega2 Pi_F, G = U minus F and D_{omega*} the defect of omega*:
///
///   Phi11(l) = l Pi_G (I - l Z)^{-1} Pi_U D_{omega*}
///   Phi12(l) =   Pi_G (I - l Z)^{-1}
///   Phi21(l) = Pi_Y D_{omega*} + l omega1 Pi_F (I - l Z)^{-1} Pi_U D_{omega*}
///   Phi22(l) = omega1 Pi_F (I - l Z)^{-1}
///
/// All four share the resolvent of Z. Every Schur parameter V from G to
/// D_{omega*} yields the solution
///
///   H_V = Phi22 + Phi21 V (I - Phi11 V)^{-1} Phi12.
///
/// D_{omega*} is represented in the coordinates of an orthonormal basis of
/// its range inside Y (+) U.
///

#pragma once

#include <vector>

#include "rclkit/interp.hpp"
#include "rclkit/series.hpp"
#include "rclkit/sysco.hpp"

namespace rclkit {

class RedhefferRealization {
 public:
  const InterpProblem& problem() const { return problem_; }

  /// Z = omega2 Pi_F (u x u).
  const CMatrix& z() const { return z_; }
  /// D_{omega*} on Y (+) U.
  const CMatrix& dstar() const { return dstar_; }
  /// Orthonormal basis of the defect space of omega* in Y (+) U.
  const SubspaceBasis& dstar_space() const { return dstar_space_; }
  const SubspaceBasis& g() const { return g_; }

  Eigen::Index d_dim() const { return dstar_space_.dim(); }
  Eigen::Index g_dim() const { return g_.dim(); }

  /// Pi_U D_{omega*} restricted to the defect space (u x d).
  CMatrix input_map() const;
  /// Pi_Y D_{omega*} restricted to the defect space (y x d).
  CMatrix feedthrough() const;

  /// The realization as the co-isometric system with state space U, input
  /// D_{omega*} and output G (+) Y; its transfer function is
  /// [Phi11; Phi21] and its observability function is [Phi12; Phi22].
  CoisometricSystem as_system(const Tolerances& tol = {}) const;

  /// Deviation of [[omega Pi_F, D_{omega*}], [Pi_G, 0]] from a co-isometry
  /// as measured when the realization was built.
  double block_coisometry_deficiency() const { return block_deficiency_; }

 private:
  friend RedhefferRealization realize(const InterpProblem&, const Tolerances&);
  explicit RedhefferRealization(InterpProblem p) : problem_(std::move(p)) {}

  InterpProblem problem_;
  CMatrix z_;
  CMatrix dstar_;
  SubspaceBasis dstar_space_;
  SubspaceBasis g_;
  double block_deficiency_ = 0.0;
};

/// Builds the shared realization and audits the co-isometry of
/// [[omega Pi_F, D_{omega*}], [Pi_G, 0]]; throws InternalContradiction if
/// its deficiency exceeds identity_tol.
RedhefferRealization realize(const InterpProblem& p, const Tolerances& tol = {});

struct PhiValues {
  CMatrix phi11;  ///< g x d
  CMatrix phi12;  ///< g x u
  CMatrix phi21;  ///< y x d
  CMatrix phi22;  ///< y x u
};

/// Values at l with |l| < 1 from one factorization of I - l Z.
PhiValues phi_eval(const RedhefferRealization& r, Complex lambda);

struct PhiSeries {
  MatrixSeries phi11, phi12, phi21, phi22;
};

/// Taylor coefficients 0..order from the Neumann series of the resolvent.
PhiSeries phi_taylor(const RedhefferRealization& r, int order);

struct CoefficientAuditReport {
  int blocks = 0;
  /// ||MM* - I|| of the finite section M.
  double row_gram_deviation = 0.0;
  /// ||C*C - I|| where C holds the columns of the first ceil(blocks / 2)
  /// D-blocks and the U columns of the section. The trailing D-blocks are
  /// left out because truncation cuts their tails short. Only tends to 0
  /// for isometric omega with pointwise stable Z, and is reported, not
  /// checked.
  double column_gram_deviation = 0.0;
};

/// Finite section with `blocks` block rows of
///
///   [M_{Phi11} Gamma_{Phi12}]
///   [M_{Phi21} Gamma_{Phi22}] : H^2(D_{omega*}) (+) U -> H^2(G) (+) H^2(Y)
///
/// rows ordered G-blocks then Y-blocks, columns D-blocks then U.
CMatrix coefficient_matrix(const RedhefferRealization& r, int blocks);

CoefficientAuditReport coefficient_matrix_report(const RedhefferRealization& r,
                                                 int blocks);

/// Throws AuditFailure if row_gram_deviation > tol.
CoefficientAuditReport coefficient_matrix_audit(const RedhefferRealization& r,
                                                int blocks, double tol);

/// Schur parameter V(l) = V_0 + V_1 l + ... + V_k l^k from G to D_{omega*}.
class SchurParameter {
 public:
  static SchurParameter constant(CMatrix v);
  static SchurParameter polynomial(std::vector<CMatrix> coeffs);

  const MatrixSeries& series() const { return series_; }
  bool is_constant() const { return series_.order() == 0; }
  Eigen::Index rows() const { return series_.rows(); }
  Eigen::Index cols() const { return series_.cols(); }

  /// Norm of the finite section with 8 (k + 1) blocks of the
  /// multiplication operator (for k = 0 just ||V_0||).
  double contraction_norm() const;

 private:
  explicit SchurParameter(MatrixSeries s) : series_(std::move(s)) {}
  MatrixSeries series_;
};

/// Taylor coefficients 0..order of H_V. Throws InvalidParameter if V has
/// the wrong shape or is not contractive within contraction_slack.
TaylorSeries lft_solution(const RedhefferRealization& r,
                          const SchurParameter& v, int order,
                          const Tolerances& tol = {});

}  // namespace rclkit
