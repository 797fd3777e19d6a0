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

#include "rclkit/opcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rclkit/errors.hpp"

namespace rclkit {

namespace {

double orthonormality_tolerance(Eigen::Index ambient_dim) {
  return 1e-12 * static_cast<double>(std::max<Eigen::Index>(ambient_dim, 1));
}

Eigen::VectorXd singular_values(const CMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return Eigen::VectorXd(0);
  if (std::min(m.rows(), m.cols()) > 16) return Eigen::BDCSVD<CMatrix>(m).singularValues();
  return Eigen::JacobiSVD<CMatrix>(m).singularValues();
}


}  // namespace

void Tolerances::check() const {
  if (!(rank_tol >= 0.0) || !(contraction_slack >= 0.0) ||
      !(identity_tol >= 0.0)) {
    throw InvalidInput("tolerances must be non-negative");
  }
}

SubspaceBasis::SubspaceBasis(Eigen::Index ambient_dim, CMatrix basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
  if (ambient_dim_ < 0) throw InvalidInput("negative ambient dimension");
  if (basis_.rows() != ambient_dim_) {
    throw DimensionMismatch("subspace basis rows differ from ambient dimension");
  }
  if (basis_.cols() > ambient_dim_) {
    throw InvalidInput("subspace basis has more columns than the ambient dimension");
  }
  require_finite(basis_, "subspace basis");
  if (basis_.cols() > 0) {
    const CMatrix gram = basis_.adjoint() * basis_;
    const double dev =
        (gram - CMatrix::Identity(gram.rows(), gram.cols())).norm();
    if (dev > orthonormality_tolerance(ambient_dim_)) {
      std::ostringstream os;
      os << "subspace basis is not orthonormal (deviation " << dev << ")";
      throw InvalidInput(os.str());
    }
  }
}

SubspaceBasis make_trusted_subspace(Eigen::Index ambient_dim, CMatrix basis) {
  return SubspaceBasis(SubspaceBasis::Trusted{}, ambient_dim, std::move(basis));
}

SubspaceBasis SubspaceBasis::zero(Eigen::Index ambient_dim) {
  return make_trusted_subspace(ambient_dim, CMatrix(ambient_dim, 0));
}

SubspaceBasis SubspaceBasis::full(Eigen::Index ambient_dim) {
  return make_trusted_subspace(ambient_dim,
                               CMatrix::Identity(ambient_dim, ambient_dim));
}

CMatrix SubspaceBasis::projector() const {
  return basis_ * basis_.adjoint();
}

void require_finite(const CMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw InvalidInput(std::string(what) + " has non-finite entries");
  }
}

double spectral_norm(const CMatrix& m) {
  require_finite(m, "matrix");
  const auto sv = singular_values(m);
  return sv.size() == 0 ? 0.0 : sv(0);
}

double hermitian_norm(const CMatrix& h) {
  require_finite(h, "matrix");
  if (h.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(h),
                                            Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

double smallest_singular_value(const CMatrix& m) {
  require_finite(m, "matrix");
  if (m.cols() == 0) return std::numeric_limits<double>::infinity();
  if (m.rows() < m.cols()) return 0.0;
  const auto sv = singular_values(m);
  return sv(sv.size() - 1);
}

CMatrix hermitian_part(const CMatrix& m) {
  return (m + m.adjoint()) * 0.5;
}

CMatrix psd_sqrt(const CMatrix& p) {
  if (p.rows() != p.cols()) throw DimensionMismatch("psd_sqrt needs a square matrix");
  if (p.rows() == 0) return CMatrix(0, 0);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(p));
  const Eigen::VectorXd root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * root.cast<Complex>().asDiagonal() *
         es.eigenvectors().adjoint();
}

Defect defect(const CMatrix& n, const Tolerances& tol) {
  require_contraction(n, tol, "defect operand");
  const Eigen::Index c = n.cols();
  if (c == 0) return {CMatrix(0, 0), SubspaceBasis::zero(0)};

  const CMatrix gap = CMatrix::Identity(c, c) - n.adjoint() * n;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(gap));
  const Eigen::VectorXd& ev = es.eigenvalues();  // ascending

  Eigen::VectorXd root = Eigen::VectorXd::Zero(c);
  Eigen::Index first_kept = c;
  for (Eigen::Index i = 0; i < c; ++i) {
    if (ev(i) > tol.rank_tol) {
      root(i) = std::sqrt(ev(i));
      first_kept = std::min(first_kept, i);
    }
  }
  const CMatrix& vecs = es.eigenvectors();
  CMatrix op = vecs * root.cast<Complex>().asDiagonal() * vecs.adjoint();
  CMatrix space = vecs.rightCols(c - first_kept);
  return {std::move(op), make_trusted_subspace(c, std::move(space))};
}

SubspaceBasis range_closure_basis(const CMatrix& m, const Tolerances& tol) {
  require_finite(m, "matrix");
  if (m.rows() == 0 || m.cols() == 0) return SubspaceBasis::zero(m.rows());
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (sv(0) <= tol.rank_tol) return SubspaceBasis::zero(m.rows());
  const double cut = tol.rank_tol * sv(0);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > cut) ++rank;
  return make_trusted_subspace(m.rows(), svd.matrixU().leftCols(rank));
}

SubspaceBasis kernel_basis(const CMatrix& m, const Tolerances& tol) {
  require_finite(m, "matrix");
  const Eigen::Index c = m.cols();
  if (c == 0) return SubspaceBasis::zero(0);
  if (m.rows() == 0) return SubspaceBasis::full(c);
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  if (sv(0) > tol.rank_tol) {
    const double cut = tol.rank_tol * sv(0);
    while (rank < sv.size() && sv(rank) > cut) ++rank;
  }
  return make_trusted_subspace(c, svd.matrixV().rightCols(c - rank));
}

IdentityCheck is_coisometry(const CMatrix& m, const Tolerances& tol) {
  require_finite(m, "matrix");
  if (m.rows() == 0) return {true, 0.0};
  const double dev =
      hermitian_norm(m * m.adjoint() - CMatrix::Identity(m.rows(), m.rows()));
  return {dev <= tol.identity_tol, dev};
}

IdentityCheck is_isometry(const CMatrix& m, const Tolerances& tol) {
  require_finite(m, "matrix");
  if (m.cols() == 0) return {true, 0.0};
  const double dev =
      hermitian_norm(m.adjoint() * m - CMatrix::Identity(m.cols(), m.cols()));
  return {dev <= tol.identity_tol, dev};
}

bool is_contraction(const CMatrix& m, const Tolerances& tol) {
  return spectral_norm(m) <= 1.0 + tol.contraction_slack;
}

void require_contraction(const CMatrix& m, const Tolerances& tol,
                         const char* what) {
  const double nrm = spectral_norm(m);
  if (nrm > 1.0 + tol.contraction_slack) {
    std::ostringstream os;
    os.precision(17);
    os << what << " is not a contraction (norm " << nrm << ")";
    throw NotAContraction(os.str(), nrm);
  }
}

bool psd_order_leq(const CMatrix& p, const CMatrix& q, const Tolerances& tol) {
  if (p.rows() != p.cols() || q.rows() != q.cols() || p.rows() != q.rows()) {
    throw DimensionMismatch("psd_order_leq needs square matrices of equal size");
  }
  require_finite(p, "matrix");
  require_finite(q, "matrix");
  if (p.rows() == 0) return true;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(q - p),
                                            Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0) >= -tol.identity_tol;
}

SubspaceBasis orthocomplement(const SubspaceBasis& s) {
  const Eigen::Index n = s.ambient_dim();
  const Eigen::Index k = s.dim();
  if (k == 0) return SubspaceBasis::full(n);
  if (k == n) return SubspaceBasis::zero(n);
  Eigen::HouseholderQR<CMatrix> qr(s.basis());
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  return make_trusted_subspace(n, q.rightCols(n - k));
}

SubspaceBasis join(const SubspaceBasis& a, const SubspaceBasis& b,
                   const Tolerances& tol) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatch("join of subspaces in different ambient spaces");
  }
  return range_closure_basis(hstack(a.basis(), b.basis()), tol);
}

CMatrix vstack(const CMatrix& top, const CMatrix& bottom) {
  if (top.cols() != bottom.cols()) {
    throw DimensionMismatch("vstack: column counts differ");
  }
  CMatrix out(top.rows() + bottom.rows(), top.cols());
  out.topRows(top.rows()) = top;
  out.bottomRows(bottom.rows()) = bottom;
  return out;
}

CMatrix hstack(const CMatrix& left, const CMatrix& right) {
  if (left.rows() != right.rows()) {
    throw DimensionMismatch("hstack: row counts differ");
  }
  CMatrix out(left.rows(), left.cols() + right.cols());
  out.leftCols(left.cols()) = left;
  out.rightCols(right.cols()) = right;
  return out;
}

}  // namespace rclkit
