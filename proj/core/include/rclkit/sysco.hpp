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
/// \file sysco.hpp
///
/// Co-isometric systems {A, B, C, D}: the block operator
///
///   [A B]
///   [C D] : X (+) V -> X (+) W
///
/// is a co-isometry. Transfer function F(l) = D + l C (I - l A)^{-1} B and
/// observability function W(l) = C (I - l A)^{-1} are expanded as Taylor
/// series, and the row-Gram identity T_F T_F* + G_W G_W* = I of the
/// finite block-Toeplitz sections is audited.
///

#pragma once

#include "rclkit/opcore.hpp"
#include "rclkit/series.hpp"

namespace rclkit {

class CoisometricSystem {
 public:
  /// Validates shapes and the co-isometry of the system matrix.
  static CoisometricSystem make(CMatrix a, CMatrix b, CMatrix c, CMatrix d,
                                const Tolerances& tol = {});

  /// Shapes are checked, the co-isometry is not. Meant for negative
  /// controls of the audits.
  static CoisometricSystem unchecked(CMatrix a, CMatrix b, CMatrix c,
                                     CMatrix d);

  const CMatrix& a() const { return a_; }
  const CMatrix& b() const { return b_; }
  const CMatrix& c() const { return c_; }
  const CMatrix& d() const { return d_; }

  Eigen::Index state_dim() const { return a_.rows(); }
  Eigen::Index input_dim() const { return b_.cols(); }
  Eigen::Index output_dim() const { return c_.rows(); }

  CMatrix system_matrix() const;

 private:
  CoisometricSystem(CMatrix a, CMatrix b, CMatrix c, CMatrix d);

  CMatrix a_, b_, c_, d_;
};

/// The Julia operator [[a, D_{a*}], [D_a, -a*]] of a contraction a, read as
/// a system with A = a, B = D_{a*}, C = D_a, D = -a*. It is unitary.
CoisometricSystem julia_system(const CMatrix& a, const Tolerances& tol = {});

/// F_0 = D, F_n = C A^{n-1} B.
MatrixSeries transfer_taylor(const CoisometricSystem& s, int order);

/// W_n = C A^n.
MatrixSeries observability_taylor(const CoisometricSystem& s, int order);

struct StAuditReport {
  int blocks = 0;
  /// ||X - I|| over the whole N-block section.
  double max_deviation = 0.0;
  /// Largest ||X_{n,n} - I|| over the diagonal blocks.
  double max_diagonal_deviation = 0.0;
  /// Largest off-diagonal block norm.
  double max_offdiagonal = 0.0;
};

/// Computes X = T_F T_F* + G_W G_W* on `blocks` block rows. Every entry of
/// X is a finite sum, so the result is exact up to roundoff.
StAuditReport st_identity_report(const CoisometricSystem& s, int blocks);

/// As st_identity_report, throwing AuditFailure if max_deviation > tol.
StAuditReport st_identity_audit(const CoisometricSystem& s, int blocks,
                                double tol);

}  // namespace rclkit
