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
/// \file opcore.hpp
///
/// Dense complex matrix primitives shared by every other module: norms,
/// defect operators, orthonormal bases of ranges and the contraction /
/// isometry predicates. Zero-dimensional matrices are legal everywhere and
/// stand for maps into or out of the zero space.
///

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace rclkit {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

struct Tolerances {
  /// Relative singular value cut for ranges; absolute eigenvalue cut for
  /// defect spaces.
  double rank_tol = 1e-10;
  /// Allowed excess of an operator norm over 1 before a map is rejected.
  double contraction_slack = 1e-10;
  /// Tolerance for identities such as MM* = I.
  double identity_tol = 1e-8;

  void check() const;
};

/// A subspace of C^n stored through an orthonormal basis (n x k).
class SubspaceBasis {
 public:
  SubspaceBasis() = default;

  /// Validates orthonormality of the columns.
  SubspaceBasis(Eigen::Index ambient_dim, CMatrix basis);

  static SubspaceBasis zero(Eigen::Index ambient_dim);
  static SubspaceBasis full(Eigen::Index ambient_dim);

  Eigen::Index ambient_dim() const { return ambient_dim_; }
  Eigen::Index dim() const { return basis_.cols(); }
  const CMatrix& basis() const { return basis_; }

  /// Orthogonal projector onto the subspace, as an ambient x ambient matrix.
  CMatrix projector() const;

 private:
  struct Trusted {};
  SubspaceBasis(Trusted, Eigen::Index ambient_dim, CMatrix basis)
      : ambient_dim_(ambient_dim), basis_(std::move(basis)) {}

  friend SubspaceBasis make_trusted_subspace(Eigen::Index, CMatrix);

  Eigen::Index ambient_dim_ = 0;
  CMatrix basis_ = CMatrix(0, 0);
};

// Skips the orthonormality audit; for bases produced by a decomposition.
SubspaceBasis make_trusted_subspace(Eigen::Index ambient_dim, CMatrix basis);

/// Throws InvalidInput if any entry is NaN or infinite.
void require_finite(const CMatrix& m, const char* what);

/// Largest singular value; 0 for zero-dimensional input.
double spectral_norm(const CMatrix& m);

/// Spectral norm of a Hermitian matrix from its extreme eigenvalues.
double hermitian_norm(const CMatrix& h);

/// Smallest singular value of a matrix with at least as many rows as
/// columns (min over the column count); +inf when there are no columns.
double smallest_singular_value(const CMatrix& m);

/// Hermitian part (M + M*)/2.
CMatrix hermitian_part(const CMatrix& m);

/// Positive square root of a Hermitian PSD matrix, negative eigenvalues
/// clamped to zero.
CMatrix psd_sqrt(const CMatrix& p);

struct Defect {
  CMatrix op;           ///< D_N = (I - N*N)^{1/2}
  SubspaceBasis space;  ///< closure of the range of D_N
};

/// Defect operator and defect space of a contraction N.
///
/// Eigenvalues of I - N*N at or below rank_tol are treated as zero both in
/// the operator and in the space, so an isometry has D = 0 exactly.
Defect defect(const CMatrix& n, const Tolerances& tol = {});

/// Orthonormal basis of the range of M; singular values above
/// rank_tol * sigma_max are kept, and a matrix whose largest singular value
/// is at most rank_tol has range {0}.
SubspaceBasis range_closure_basis(const CMatrix& m, const Tolerances& tol = {});

/// Orthonormal basis of the kernel of M (same rank rule as ranges).
SubspaceBasis kernel_basis(const CMatrix& m, const Tolerances& tol = {});

struct IdentityCheck {
  bool holds = false;
  double deficiency = 0.0;

  explicit operator bool() const { return holds; }
};

/// ||MM* - I|| <= identity_tol. Vacuously true when M has no rows.
IdentityCheck is_coisometry(const CMatrix& m, const Tolerances& tol = {});

/// ||M*M - I|| <= identity_tol. Vacuously true when M has no columns.
IdentityCheck is_isometry(const CMatrix& m, const Tolerances& tol = {});

/// ||M|| <= 1 + contraction_slack.
bool is_contraction(const CMatrix& m, const Tolerances& tol = {});

/// Throws NotAContraction when ||M|| exceeds 1 + contraction_slack.
void require_contraction(const CMatrix& m, const Tolerances& tol,
                         const char* what);

/// P <= Q in the Loewner order, up to identity_tol.
bool psd_order_leq(const CMatrix& p, const CMatrix& q,
                   const Tolerances& tol = {});

SubspaceBasis orthocomplement(const SubspaceBasis& s);

/// Closed span of the union of two subspaces of the same ambient space.
SubspaceBasis join(const SubspaceBasis& a, const SubspaceBasis& b,
                   const Tolerances& tol = {});

/// Vertical concatenation [top; bottom]; column counts must agree.
CMatrix vstack(const CMatrix& top, const CMatrix& bottom);

/// Horizontal concatenation [left, right]; row counts must agree.
CMatrix hstack(const CMatrix& left, const CMatrix& right);

}  // namespace rclkit
