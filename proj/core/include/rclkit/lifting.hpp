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
/// \file lifting.hpp
///
/// Finite sections of the Sz.-Nagy-Schaffer isometric lifting of T' on
/// H' (+) H^2(D_T'), and the correspondence between solutions H of the
/// interpolation problem and contractive interpolants
///
///   B = [A; Gamma_H D_A] : H -> H' (+) H^2(D_T').
///
/// H^2(D_T') is cut to M Taylor blocks. The truncated shift drops the last
/// block, so the lifting is isometric except on that block and identities
/// involving it are reported separately.
///

#pragma once

#include "rclkit/dataset.hpp"
#include "rclkit/interp.hpp"
#include "rclkit/opcore.hpp"

namespace rclkit {

class TruncatedLifting {
 public:
  const CMatrix& tp() const { return tp_; }
  int blocks() const { return blocks_; }
  Eigen::Index hp_dim() const { return tp_.rows(); }
  Eigen::Index defect_dim() const { return defect_dim_; }
  Eigen::Index k_dim() const { return uprime_.rows(); }

  /// [[T', 0], [E D_T', S_M]] on H' (+) D_T'^M.
  const CMatrix& uprime() const { return uprime_; }

  /// First row of the final shift block, i.e. the truncation boundary.
  Eigen::Index boundary_offset() const {
    return hp_dim() + (blocks_ - 1) * defect_dim_;
  }

  /// ||U'*U' - I|| on the columns before the final block.
  double isometry_deficiency_off_boundary() const;

 private:
  friend TruncatedLifting build_lifting(const CMatrix&, int, const Tolerances&);
  TruncatedLifting() = default;

  CMatrix tp_;
  int blocks_ = 0;
  Eigen::Index defect_dim_ = 0;
  CMatrix uprime_;
};

TruncatedLifting build_lifting(const CMatrix& tp, int blocks,
                               const Tolerances& tol = {});

/// B = [A; h_0 D_A; ...; h_{M-1} D_A] with H in (D_T', D_A) coordinates as
/// produced by underlying_contraction. Throws NotContractive when the
/// partial Gram of h_0..h_{M-1} exceeds (1 + identity_tol) I or ||B||
/// exceeds 1 + contraction_slack.
CMatrix interpolant_from_solution(const DataSet& d, const TaylorSeries& h,
                                  int blocks, const Tolerances& tol = {});

struct RcltReport {
  bool projection_ok = false;
  bool intertwine_ok = false;
  /// Always true: the last block row of U'BR - BQ is excluded from
  /// intertwine_ok and reported in boundary_residual.
  bool boundary_blocks_excluded = true;
  double projection_residual = 0.0;
  double intertwine_residual = 0.0;
  double boundary_residual = 0.0;

  bool ok() const { return projection_ok && intertwine_ok; }
};

/// Checks Pi_H' B = A (exact equality) and U' B R = B Q on the retained
/// block rows (within identity_tol).
RcltReport verify_rclt(const DataSet& d, const CMatrix& b, int blocks,
                       const Tolerances& tol = {});

}  // namespace rclkit
