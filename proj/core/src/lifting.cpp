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

#include "rclkit/lifting.hpp"

#include <sstream>

#include "rclkit/errors.hpp"

namespace rclkit {

double TruncatedLifting::isometry_deficiency_off_boundary() const {
  return is_isometry(uprime_.leftCols(boundary_offset())).deficiency;
}

TruncatedLifting build_lifting(const CMatrix& tp, int blocks,
                               const Tolerances& tol) {
  if (blocks < 1) throw InvalidInput("build_lifting needs at least one block");
  if (tp.rows() != tp.cols()) throw DimensionMismatch("T' must be square");
  const Defect dt = defect(tp, tol);  // throws NotAContraction

  TruncatedLifting l;
  l.tp_ = tp;
  l.blocks_ = blocks;
  l.defect_dim_ = dt.space.dim();
  const Eigen::Index hp = tp.rows();
  const Eigen::Index t = l.defect_dim_;
  const Eigen::Index k = hp + blocks * t;

  l.uprime_ = CMatrix::Zero(k, k);
  l.uprime_.topLeftCorner(hp, hp) = tp;
  l.uprime_.block(hp, 0, t, hp) = dt.space.basis().adjoint() * dt.op;
  for (int b = 0; b + 1 < blocks; ++b) {
    l.uprime_.block(hp + (b + 1) * t, hp + b * t, t, t).setIdentity();
  }
  return l;
}

CMatrix interpolant_from_solution(const DataSet& d, const TaylorSeries& h,
                                  int blocks, const Tolerances& tol) {
  if (blocks < 1) throw InvalidInput("interpolant needs at least one block");
  if (h.order() < blocks - 1) {
    throw InvalidInput("interpolant: series order must be at least blocks - 1");
  }
  const Defect da = defect(d.a, tol);
  const Defect dt = defect(d.tp, tol);
  if (h.rows() != dt.space.dim() || h.cols() != da.space.dim()) {
    throw DimensionMismatch("interpolant: series must map D_A to D_T'");
  }

  const MatrixSeries used = truncate(h, blocks - 1);
  const CMatrix gram = partial_gram(used);
  if (gram.rows() > 0) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(gram),
                                              Eigen::EigenvaluesOnly);
    const double top = es.eigenvalues()(gram.rows() - 1);
    if (top > 1.0 + tol.identity_tol) {
      std::ostringstream os;
      os << "solution is outside the H^2 ball (Gram norm " << top << ")";
      throw NotContractive(os.str());
    }
  }

  const CMatrix da_coords = da.space.basis().adjoint() * da.op;
  const Eigen::Index t = dt.space.dim();
  CMatrix b(d.hp_dim() + blocks * t, d.h_dim());
  b.topRows(d.hp_dim()) = d.a;
  for (int n = 0; n < blocks; ++n) {
    b.middleRows(d.hp_dim() + n * t, t) = used[n] * da_coords;
  }
  const double nrm = spectral_norm(b);
  if (nrm > 1.0 + tol.contraction_slack) {
    std::ostringstream os;
    os << "interpolant is not a contraction (norm " << nrm << ")";
    throw NotContractive(os.str());
  }
  return b;
}

RcltReport verify_rclt(const DataSet& d, const CMatrix& b, int blocks,
                       const Tolerances& tol) {
  const TruncatedLifting l = build_lifting(d.tp, blocks, tol);
  if (b.rows() != l.k_dim() || b.cols() != d.h_dim()) {
    throw DimensionMismatch("verify_rclt: B does not match the truncation");
  }
  RcltReport rep;
  if (d.a.size() > 0) {
    rep.projection_residual =
        (b.topRows(d.hp_dim()) - d.a).cwiseAbs().maxCoeff();
  }
  rep.projection_ok = rep.projection_residual == 0.0;

  const CMatrix gap = l.uprime() * b * d.r - b * d.q;
  const Eigen::Index cut = l.boundary_offset();
  rep.intertwine_residual = spectral_norm(gap.topRows(cut));
  rep.boundary_residual = spectral_norm(gap.bottomRows(gap.rows() - cut));
  rep.intertwine_ok = rep.intertwine_residual <= tol.identity_tol;
  return rep;
}

}  // namespace rclkit
