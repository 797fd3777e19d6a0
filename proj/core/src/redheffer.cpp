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

#include "rclkit/redheffer.hpp"

#include <cmath>
#include <sstream>

#include "rclkit/errors.hpp"

namespace rclkit {

RedhefferRealization realize(const InterpProblem& p, const Tolerances& tol) {
  RedhefferRealization r(p);
  r.z_ = p.state_operator();
  require_contraction(r.z_, tol, "omega2 Pi_F");

  const CMatrix omega = p.omega();
  Defect dstar = defect(omega.adjoint(), tol);
  r.dstar_ = std::move(dstar.op);
  r.dstar_space_ = std::move(dstar.space);
  r.g_ = p.g();

  const CMatrix dstar_cols = r.dstar_ * r.dstar_space_.basis();
  const CMatrix top = hstack(omega * p.f().basis().adjoint(), dstar_cols);
  const CMatrix bottom =
      hstack(r.g_.basis().adjoint(), CMatrix::Zero(r.g_dim(), r.d_dim()));
  const auto check = is_coisometry(vstack(top, bottom), tol);
  r.block_deficiency_ = check.deficiency;
  if (!check) {
    std::ostringstream os;
    os << "[[omega Pi_F, D_omega*], [Pi_G, 0]] is not a co-isometry "
          "(deficiency "
       << check.deficiency << ")";
    throw InternalContradiction(os.str());
  }
  return r;
}

CMatrix RedhefferRealization::input_map() const {
  const Eigen::Index u = problem_.u_dim();
  return dstar_.bottomRows(u) * dstar_space_.basis();
}

CMatrix RedhefferRealization::feedthrough() const {
  const Eigen::Index y = problem_.y_dim();
  return dstar_.topRows(y) * dstar_space_.basis();
}

CoisometricSystem RedhefferRealization::as_system(const Tolerances& tol) const {
  const CMatrix c = vstack(g_.basis().adjoint(),
                           problem_.omega1() * problem_.f().basis().adjoint());
  const CMatrix d = vstack(CMatrix::Zero(g_dim(), d_dim()), feedthrough());
  return CoisometricSystem::make(z_, input_map(), c, d, tol);
}

PhiValues phi_eval(const RedhefferRealization& r, Complex lambda) {
  if (!(std::abs(lambda) < 1.0)) {
    throw OutOfDisc("phi_eval: |lambda| must be < 1");
  }
  const InterpProblem& p = r.problem();
  const Eigen::Index u = p.u_dim();
  CMatrix resolvent(u, u);
  if (u > 0) {
    Eigen::PartialPivLU<CMatrix> lu(CMatrix::Identity(u, u) - lambda * r.z());
    resolvent = lu.solve(CMatrix::Identity(u, u));
  }
  const CMatrix g_res = r.g().basis().adjoint() * resolvent;
  const CMatrix y_res = p.omega1() * p.f().basis().adjoint() * resolvent;
  const CMatrix b = r.input_map();

  PhiValues v;
  v.phi11 = lambda * (g_res * b);
  v.phi12 = g_res;
  v.phi21 = r.feedthrough() + lambda * (y_res * b);
  v.phi22 = y_res;
  return v;
}

PhiSeries phi_taylor(const RedhefferRealization& r, int order) {
  if (order < 0) throw InvalidInput("phi_taylor: negative order");
  const InterpProblem& p = r.problem();
  const CMatrix b = r.input_map();

  PhiSeries s;
  s.phi22 = central_taylor(p, order);
  s.phi12 = MatrixSeries(r.g_dim(), p.u_dim(), order);
  s.phi12[0] = r.g().basis().adjoint();
  for (int n = 0; n < order; ++n) s.phi12[n + 1] = s.phi12[n] * r.z();

  s.phi11 = MatrixSeries(r.g_dim(), r.d_dim(), order);
  s.phi21 = MatrixSeries(p.y_dim(), r.d_dim(), order);
  s.phi21[0] = r.feedthrough();
  for (int n = 0; n < order; ++n) {
    s.phi11[n + 1] = s.phi12[n] * b;
    s.phi21[n + 1] = s.phi22[n] * b;
  }
  return s;
}

CMatrix coefficient_matrix(const RedhefferRealization& r, int blocks) {
  if (blocks < 1) throw InvalidInput("coefficient_matrix needs blocks >= 1");
  const PhiSeries s = phi_taylor(r, blocks - 1);
  const CMatrix top = hstack(block_toeplitz(s.phi11, blocks),
                             stacked_column(s.phi12, blocks));
  const CMatrix bottom = hstack(block_toeplitz(s.phi21, blocks),
                                stacked_column(s.phi22, blocks));
  return vstack(top, bottom);
}

CoefficientAuditReport coefficient_matrix_report(const RedhefferRealization& r,
                                                 int blocks) {
  const CMatrix m = coefficient_matrix(r, blocks);
  CoefficientAuditReport rep;
  rep.blocks = blocks;
  rep.row_gram_deviation =
      hermitian_norm(m * m.adjoint() - CMatrix::Identity(m.rows(), m.rows()));
  const Eigen::Index d = r.d_dim();
  const Eigen::Index lead = ((blocks + 1) / 2) * d;
  const CMatrix cols = hstack(m.leftCols(lead), m.rightCols(r.problem().u_dim()));
  rep.column_gram_deviation = hermitian_norm(
      cols.adjoint() * cols - CMatrix::Identity(cols.cols(), cols.cols()));
  return rep;
}

CoefficientAuditReport coefficient_matrix_audit(const RedhefferRealization& r,
                                                int blocks, double tol) {
  CoefficientAuditReport rep = coefficient_matrix_report(r, blocks);
  if (rep.row_gram_deviation > tol) {
    std::ostringstream os;
    os << "Redheffer coefficient matrix row Gram deviates from I by "
       << rep.row_gram_deviation;
    throw AuditFailure(os.str(), rep.row_gram_deviation);
  }
  return rep;
}

SchurParameter SchurParameter::constant(CMatrix v) {
  return SchurParameter(MatrixSeries::constant(v));
}

SchurParameter SchurParameter::polynomial(std::vector<CMatrix> coeffs) {
  return SchurParameter(MatrixSeries(std::move(coeffs)));
}

double SchurParameter::contraction_norm() const {
  if (is_constant()) return spectral_norm(series_[0]);
  return spectral_norm(block_toeplitz(series_, 8 * (series_.order() + 1)));
}

TaylorSeries lft_solution(const RedhefferRealization& r,
                          const SchurParameter& v, int order,
                          const Tolerances& tol) {
  if (order < 0) throw InvalidInput("lft_solution: negative order");
  if (v.rows() != r.d_dim() || v.cols() != r.g_dim()) {
    std::ostringstream os;
    os << "Schur parameter must be " << r.d_dim() << " x " << r.g_dim()
       << ", got " << v.rows() << " x " << v.cols();
    throw InvalidParameter(os.str());
  }
  const double nrm = v.contraction_norm();
  if (nrm > 1.0 + tol.contraction_slack) {
    std::ostringstream os;
    os << "Schur parameter is not contractive (norm " << nrm << ")";
    throw InvalidParameter(os.str());
  }

  const PhiSeries s = phi_taylor(r, order);
  const MatrixSeries& vs = v.series();
  // Phi11(0) = 0, so the constant term of I - Phi11 V is I.
  const MatrixSeries loop =
      sub(MatrixSeries::identity(r.g_dim()), mul(s.phi11, vs, order), order);
  const MatrixSeries tail =
      mul(mul(mul(s.phi21, vs, order), inv(loop, order), order), s.phi12, order);
  return add(s.phi22, tail, order);
}

}  // namespace rclkit
