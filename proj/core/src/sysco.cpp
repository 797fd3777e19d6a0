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

#include "rclkit/sysco.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rclkit/errors.hpp"

namespace rclkit {

namespace {

void check_shapes(const CMatrix& a, const CMatrix& b, const CMatrix& c,
                  const CMatrix& d) {
  if (a.rows() != a.cols()) throw DimensionMismatch("system: A is not square");
  if (b.rows() != a.rows()) throw DimensionMismatch("system: B rows != dim X");
  if (c.cols() != a.rows()) throw DimensionMismatch("system: C cols != dim X");
  if (d.rows() != c.rows()) throw DimensionMismatch("system: D rows != dim W");
  if (d.cols() != b.cols()) throw DimensionMismatch("system: D cols != dim V");
  require_finite(a, "A");
  require_finite(b, "B");
  require_finite(c, "C");
  require_finite(d, "D");
}

}  // namespace

CoisometricSystem::CoisometricSystem(CMatrix a, CMatrix b, CMatrix c, CMatrix d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

CoisometricSystem CoisometricSystem::make(CMatrix a, CMatrix b, CMatrix c,
                                          CMatrix d, const Tolerances& tol) {
  check_shapes(a, b, c, d);
  CoisometricSystem s(std::move(a), std::move(b), std::move(c), std::move(d));
  const auto check = is_coisometry(s.system_matrix(), tol);
  if (!check) {
    std::ostringstream os;
    os << "system matrix is not a co-isometry (deficiency " << check.deficiency
       << ")";
    throw InvalidInput(os.str());
  }
  return s;
}

CoisometricSystem CoisometricSystem::unchecked(CMatrix a, CMatrix b, CMatrix c,
                                               CMatrix d) {
  check_shapes(a, b, c, d);
  return CoisometricSystem(std::move(a), std::move(b), std::move(c),
                           std::move(d));
}

CMatrix CoisometricSystem::system_matrix() const {
  return vstack(hstack(a_, b_), hstack(c_, d_));
}

CoisometricSystem julia_system(const CMatrix& a, const Tolerances& tol) {
  require_contraction(a, tol, "Julia operator argument");
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  if (m != n) {
    throw DimensionMismatch("julia_system: state operator must be square");
  }
  // One SVD for both defects keeps a D_a = D_{a*} a exact up to roundoff,
  // also when a has singular values at 1.
  CMatrix d_a = CMatrix::Zero(n, n);
  CMatrix d_astar = CMatrix::Zero(m, m);
  if (n > 0) {
    Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::VectorXd s = svd.singularValues();
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      const double sigma = std::min(s(i), 1.0);
      s(i) = std::sqrt((1.0 - sigma) * (1.0 + sigma));
    }
    d_a = svd.matrixV() * s.asDiagonal() * svd.matrixV().adjoint();
    d_astar = svd.matrixU() * s.asDiagonal() * svd.matrixU().adjoint();
  }
  return CoisometricSystem::make(a, std::move(d_astar), std::move(d_a),
                                 -a.adjoint(), tol);
}

MatrixSeries transfer_taylor(const CoisometricSystem& s, int order) {
  MatrixSeries f(s.output_dim(), s.input_dim(), order);
  f[0] = s.d();
  CMatrix ca = s.c();  // C A^{n-1}
  for (int n = 1; n <= order; ++n) {
    f[n] = ca * s.b();
    ca = (ca * s.a()).eval();
  }
  return f;
}

MatrixSeries observability_taylor(const CoisometricSystem& s, int order) {
  MatrixSeries w(s.output_dim(), s.state_dim(), order);
  CMatrix ca = s.c();
  for (int n = 0; n <= order; ++n) {
    w[n] = ca;
    ca = (ca * s.a()).eval();
  }
  return w;
}

StAuditReport st_identity_report(const CoisometricSystem& s, int blocks) {
  if (blocks < 1) throw InvalidInput("st_identity_report needs blocks >= 1");
  const Eigen::Index w = s.output_dim();
  const CMatrix tf = block_toeplitz(transfer_taylor(s, blocks - 1), blocks);
  const CMatrix gw = stacked_column(observability_taylor(s, blocks - 1), blocks);
  const Eigen::Index total = w * blocks;
  CMatrix x = tf * tf.adjoint() + gw * gw.adjoint();
  x -= CMatrix::Identity(total, total);

  StAuditReport r;
  r.blocks = blocks;
  r.max_deviation = hermitian_norm(x);
  for (int i = 0; i < blocks; ++i) {
    for (int j = 0; j < blocks; ++j) {
      const double nrm = spectral_norm(x.block(i * w, j * w, w, w));
      if (i == j) {
        r.max_diagonal_deviation = std::max(r.max_diagonal_deviation, nrm);
      } else {
        r.max_offdiagonal = std::max(r.max_offdiagonal, nrm);
      }
    }
  }
  return r;
}

StAuditReport st_identity_audit(const CoisometricSystem& s, int blocks,
                                double tol) {
  StAuditReport r = st_identity_report(s, blocks);
  if (r.max_deviation > tol) {
    std::ostringstream os;
    os << "T_F T_F* + G_W G_W* deviates from I by " << r.max_deviation;
    throw AuditFailure(os.str(), r.max_deviation);
  }
  return r;
}

}  // namespace rclkit
