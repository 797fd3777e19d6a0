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

#include "rclkit/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rclkit/errors.hpp"

namespace rclkit {

DataSet DataSet::make(CMatrix a, CMatrix tp, CMatrix r, CMatrix q) {
  if (tp.rows() != a.rows() || tp.cols() != a.rows()) {
    throw DimensionMismatch("T' must be square of size dim H'");
  }
  if (r.rows() != a.cols() || q.rows() != a.cols()) {
    throw DimensionMismatch("R and Q must map into H = domain of A");
  }
  if (r.cols() != q.cols()) {
    throw DimensionMismatch("R and Q must share the domain H0");
  }
  require_finite(a, "A");
  require_finite(tp, "T'");
  require_finite(r, "R");
  require_finite(q, "Q");
  return DataSet{std::move(a), std::move(tp), std::move(r), std::move(q)};
}

ValidationReport validate(const DataSet& d, const Tolerances& tol) {
  // Re-run the shape checks; DataSet is an aggregate and may be built
  // directly.
  DataSet::make(d.a, d.tp, d.r, d.q);
  tol.check();

  ValidationReport rep;
  rep.a_norm = spectral_norm(d.a);
  rep.tp_norm = spectral_norm(d.tp);
  if (rep.a_norm > 1.0 + tol.contraction_slack) {
    rep.violations.push_back({kConstraintAContraction, rep.a_norm - 1.0});
  }
  if (rep.tp_norm > 1.0 + tol.contraction_slack) {
    rep.violations.push_back({kConstraintTpContraction, rep.tp_norm - 1.0});
  }

  rep.intertwining_residual = spectral_norm(d.tp * d.a * d.r - d.a * d.q);
  if (rep.intertwining_residual > tol.identity_tol) {
    rep.violations.push_back({kConstraintIntertwining, rep.intertwining_residual});
  }

  const Eigen::Index k = d.h0_dim();
  if (k > 0) {
    const CMatrix gap = d.q.adjoint() * d.q - d.r.adjoint() * d.r;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(gap),
                                              Eigen::EigenvaluesOnly);
    rep.order_residual = std::max(0.0, -es.eigenvalues()(0));
  }
  if (rep.order_residual > tol.identity_tol) {
    rep.violations.push_back({kConstraintOrder, rep.order_residual});
  }
  return rep;
}

UnderlyingContraction underlying_contraction_full(const DataSet& d,
                                                  const Tolerances& tol) {
  const ValidationReport rep = validate(d, tol);
  if (!rep.ok()) {
    std::ostringstream os;
    os << "data set violates:";
    for (const auto& v : rep.violations) {
      os << " [" << v.constraint << ", residual " << v.residual << "]";
    }
    throw IllPosedData(os.str());
  }

  Defect da = defect(d.a, tol);
  Defect dt = defect(d.tp, tol);
  const CMatrix& pa = da.space.basis();
  const CMatrix& pt = dt.space.basis();

  // D_A Q and the right-hand side in U- and Y-coordinates.
  const CMatrix daq = pa.adjoint() * da.op * d.q;
  const CMatrix rhs =
      vstack(pt.adjoint() * dt.op * d.a * d.r, pa.adjoint() * da.op * d.r);

  SubspaceBasis f = range_closure_basis(daq, tol);
  const CMatrix coords = f.basis().adjoint() * daq;

  CMatrix omega(rhs.rows(), f.dim());
  if (f.dim() > 0) {
    omega = coords.adjoint()
                .completeOrthogonalDecomposition()
                .solve(rhs.adjoint())
                .adjoint();
  }

  const double residual = spectral_norm(omega * coords - rhs);
  const double scale = std::max(1.0, spectral_norm(rhs));
  if (residual > 1e-9 * scale) {
    std::ostringstream os;
    os << "omega D_A Q = [D_T' A R; D_A R] has no solution (residual "
       << residual << ")";
    throw IllPosedData(os.str());
  }

  const Eigen::Index y = pt.cols();
  const Eigen::Index u = pa.cols();
  try {
    InterpProblem p = InterpProblem::make(std::move(f), omega.topRows(y),
                                          omega.bottomRows(u), tol);
    return UnderlyingContraction{std::move(p), std::move(da), std::move(dt),
                                 residual};
  } catch (const NotAContraction& e) {
    throw IllPosedData(std::string("underlying map: ") + e.what());
  }
}

InterpProblem underlying_contraction(const DataSet& d, const Tolerances& tol) {
  return underlying_contraction_full(d, tol).problem;
}

RqPair preset_relaxed_rq(int n, int v_dim) {
  if (n < 1) throw InvalidInput("preset_relaxed_rq: n must be >= 1");
  if (v_dim < 0) throw InvalidInput("preset_relaxed_rq: negative v_dim");
  const Eigen::Index rows = static_cast<Eigen::Index>(n) * v_dim;
  const Eigen::Index cols = static_cast<Eigen::Index>(n - 1) * v_dim;
  RqPair p{CMatrix::Zero(rows, cols), CMatrix::Zero(rows, cols)};
  p.r.topRows(cols).setIdentity();
  p.q.bottomRows(cols).setIdentity();
  return p;
}

const char* to_string(UniquenessDecision::Kind k) {
  switch (k) {
    case UniquenessDecision::Kind::Unique:
      return "unique";
    case UniquenessDecision::Kind::NotUnique:
      return "not_unique";
    case UniquenessDecision::Kind::NotApplicable:
      return "not_applicable";
  }
  return "unknown";
}

UniquenessDecision suboptimal_uniqueness(const DataSet& d,
                                         const Tolerances& tol) {
  using Kind = UniquenessDecision::Kind;
  if (spectral_norm(d.a) >= 1.0 - tol.identity_tol) {
    return {Kind::NotApplicable, "A not a strict contraction"};
  }
  if (!(smallest_singular_value(d.r) > tol.identity_tol)) {
    return {Kind::NotApplicable, "R not left invertible"};
  }
  if (range_closure_basis(d.q, tol).dim() == d.h_dim()) {
    return {Kind::Unique, "closure of Q H0 is H"};
  }
  if (defect(d.tp, tol).space.dim() == 0) {
    return {Kind::Unique, "T' is an isometry"};
  }
  return {Kind::NotUnique, "Q H0 is not dense in H and T' is not an isometry"};
}

RefconReport refcon_analysis(const DataSet& d, const Tolerances& tol) {
  const UnderlyingContraction uc = underlying_contraction_full(d, tol);
  const CMatrix& pa = uc.defect_a.space.basis();
  const SubspaceBasis g_coords = orthocomplement(uc.problem.f());

  RefconReport rep;
  rep.g = make_trusted_subspace(d.h_dim(), pa * g_coords.basis());
  rep.ker_da = orthocomplement(uc.defect_a.space);

  const CMatrix image = uc.defect_a.op * rep.g.basis();
  rep.perp_q_residual = spectral_norm(d.q.adjoint() * image);
  rep.perp_ker_residual = spectral_norm(rep.ker_da.basis().adjoint() * image);
  rep.g_image_perp_q = rep.perp_q_residual <= tol.identity_tol;
  rep.g_image_perp_ker = rep.perp_ker_residual <= tol.identity_tol;
  rep.f_equals_da = uc.problem.f_dim() == uc.problem.u_dim();

  const SubspaceBasis q_range = range_closure_basis(d.q, tol);
  rep.span_condition = join(q_range, rep.ker_da, tol).dim() == d.h_dim();
  rep.implication_holds = !rep.span_condition || rep.f_equals_da;
  return rep;
}

UniquenessDecision norm_one_rq_uniqueness(const DataSet& d,
                                          const Tolerances& tol) {
  using Kind = UniquenessDecision::Kind;
  const auto n = static_cast<int>(d.h_dim());
  if (n < 1 || d.h0_dim() != n - 1) {
    return {Kind::NotApplicable, "R, Q not of the relaxed preset shape"};
  }
  const RqPair preset = preset_relaxed_rq(n, 1);
  if ((d.r - preset.r).norm() > tol.identity_tol ||
      (d.q - preset.q).norm() > tol.identity_tol) {
    return {Kind::NotApplicable, "R, Q not of the relaxed preset shape"};
  }
  if (defect(d.tp, tol).space.dim() == 0) {
    return {Kind::NotApplicable, "T' is an isometry"};
  }
  if (std::abs(1.0 - spectral_norm(d.a)) <= tol.identity_tol) {
    return {Kind::Unique, "A has norm one"};
  }
  return {Kind::NotUnique, "A is a strict contraction"};
}

}  // namespace rclkit
