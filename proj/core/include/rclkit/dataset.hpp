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
/// \file dataset.hpp
///
/// Relaxed commutant lifting data {A, T', R, Q}:
///
///   A  : H  -> H'  contraction
///   T' : H' -> H'  contraction
///   R, Q : H0 -> H with T' A R = A Q and R*R <= Q*Q.
///
/// The isometric lifting of T' is always the Sz.-Nagy-Schaffer lifting
/// (see lifting.hpp) and is not stored.
///
/// The underlying contraction is expressed in the coordinates of the
/// orthonormal bases returned by defect(): U = D_A and Y = D_{T'}.
///

#pragma once

#include <string>
#include <vector>

#include "rclkit/interp.hpp"
#include "rclkit/opcore.hpp"

namespace rclkit {

struct DataSet {
  CMatrix a;
  CMatrix tp;
  CMatrix r;
  CMatrix q;

  /// Checks that the shapes fit together.
  static DataSet make(CMatrix a, CMatrix tp, CMatrix r, CMatrix q);

  Eigen::Index h0_dim() const { return r.cols(); }
  Eigen::Index h_dim() const { return a.cols(); }
  Eigen::Index hp_dim() const { return a.rows(); }
};

struct Violation {
  std::string constraint;
  double residual = 0.0;
};

struct ValidationReport {
  std::vector<Violation> violations;
  double intertwining_residual = 0.0;  ///< ||T'AR - AQ||
  /// max(0, -lambda_min(Q*Q - R*R))
  double order_residual = 0.0;
  double a_norm = 0.0;
  double tp_norm = 0.0;

  bool ok() const { return violations.empty(); }
};

/// Constraint names used in reports.
inline constexpr const char* kConstraintAContraction = "A contraction";
inline constexpr const char* kConstraintTpContraction = "T' contraction";
inline constexpr const char* kConstraintIntertwining = "T'AR = AQ";
inline constexpr const char* kConstraintOrder = "R*R <= Q*Q";

ValidationReport validate(const DataSet& d, const Tolerances& tol = {});

/// Everything computed on the way to the underlying contraction.
struct UnderlyingContraction {
  InterpProblem problem;
  Defect defect_a;   ///< U = space of defect_a
  Defect defect_tp;  ///< Y = space of defect_tp
  /// ||omega c - [D_T' A R; D_A R]|| in coordinates.
  double identity_residual = 0.0;
};

/// Builds omega : F = closure(D_A Q H0) -> D_T' (+) D_A with
/// omega D_A Q = [D_T' A R; D_A R]. The solve is a least-squares fit over
/// F-coordinates followed by an audit of the defining identity (1e-9
/// relative to the right-hand side) and of ||omega|| <= 1 + slack.
UnderlyingContraction underlying_contraction_full(const DataSet& d,
                                                  const Tolerances& tol = {});

/// The problem part of underlying_contraction_full.
InterpProblem underlying_contraction(const DataSet& d,
                                     const Tolerances& tol = {});

/// R = [I; 0], Q = [0; I] from V^{n-1} to V^n with V = C^v_dim.
struct RqPair {
  CMatrix r;
  CMatrix q;
};
RqPair preset_relaxed_rq(int n, int v_dim);

struct UniquenessDecision {
  enum class Kind { Unique, NotUnique, NotApplicable };
  Kind kind = Kind::NotApplicable;
  std::string reason;
};

const char* to_string(UniquenessDecision::Kind k);

/// Strict-contraction A with left invertible R: unique exactly when
/// closure(Q H0) = H or T' is an isometry.
UniquenessDecision suboptimal_uniqueness(const DataSet& d,
                                         const Tolerances& tol = {});

struct RefconReport {
  /// G = D_A minus F, in H-coordinates (orthonormal columns).
  SubspaceBasis g;
  /// Orthonormal basis of Ker D_A.
  SubspaceBasis ker_da;
  double perp_q_residual = 0.0;    ///< ||Q* D_A g||
  double perp_ker_residual = 0.0;  ///< ||K* D_A g||
  bool g_image_perp_q = false;
  bool g_image_perp_ker = false;
  bool f_equals_da = false;
  /// closure(Q H0) v Ker D_A = H
  bool span_condition = false;
  /// span_condition implies f_equals_da
  bool implication_holds = false;
};

/// Checks that D_A G is orthogonal to Q H0 and to Ker D_A, and reports the
/// full kernel of D_A.
RefconReport refcon_analysis(const DataSet& d, const Tolerances& tol = {});

/// Data with R, Q of the preset shape for V = C and D_T' != {0}: unique
/// exactly when ||A|| = 1 (|1 - ||A||| <= identity_tol).
UniquenessDecision norm_one_rq_uniqueness(const DataSet& d,
                                          const Tolerances& tol = {});

}  // namespace rclkit
