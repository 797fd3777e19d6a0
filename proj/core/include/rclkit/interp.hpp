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
/// \file interp.hpp
///
/// The H^2 interpolation problem defined by a contraction
///
///   omega = [omega1; omega2] : F -> Y (+) U,   F a subspace of U.
///
/// A solution is an H in the unit ball of H^2(U, Y) with
/// omega1 + l H(l) omega2 = H(l)|_F. In Taylor coefficients this reads
/// h_0|_F = omega1 and h_{n+1}|_F = h_n omega2.
///
/// Coordinates: U = C^u_dim, Y = C^y_dim, and F is carried by an
/// orthonormal basis; omega1 and omega2 act on F-coordinates. The
/// projection Pi_F : U -> F is basis*.
///

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rclkit/opcore.hpp"
#include "rclkit/series.hpp"

namespace rclkit {

using TaylorSeries = MatrixSeries;

class InterpProblem {
 public:
  /// Validates shapes and ||omega|| <= 1 + contraction_slack.
  static InterpProblem make(SubspaceBasis f, CMatrix omega1, CMatrix omega2,
                            const Tolerances& tol = {});

  Eigen::Index u_dim() const { return f_.ambient_dim(); }
  Eigen::Index y_dim() const { return omega1_.rows(); }
  Eigen::Index f_dim() const { return f_.dim(); }

  const SubspaceBasis& f() const { return f_; }
  const CMatrix& omega1() const { return omega1_; }
  const CMatrix& omega2() const { return omega2_; }

  /// [omega1; omega2] on F-coordinates.
  CMatrix omega() const { return vstack(omega1_, omega2_); }

  /// State operator Z = omega2 Pi_F on U.
  CMatrix state_operator() const;

  /// Pi_F omega2 as an operator on F.
  CMatrix compressed_state() const;

  /// G = U minus F.
  SubspaceBasis g() const { return orthocomplement(f_); }

 private:
  InterpProblem(SubspaceBasis f, CMatrix omega1, CMatrix omega2)
      : f_(std::move(f)), omega1_(std::move(omega1)),
        omega2_(std::move(omega2)) {}

  SubspaceBasis f_;
  CMatrix omega1_;
  CMatrix omega2_;
};

/// Taylor coefficients h_n = omega1 Pi_F (omega2 Pi_F)^n of the central
/// solution H_c(l) = omega1 Pi_F (I - l omega2 Pi_F)^{-1}, n = 0..order.
TaylorSeries central_taylor(const InterpProblem& p, int order);

struct SolutionReport {
  bool interp_ok = false;
  bool ball_ok = false;
  /// Largest coefficient-recursion residual.
  double interp_residual = 0.0;
  /// First n whose recursion residual exceeds tol (n = 0 is h_0|_F =
  /// omega1, n > 0 is h_n|_F = h_{n-1} omega2); -1 if none.
  int first_failure = -1;
  /// Largest eigenvalue of the partial Gram sum h_n* h_n, minus 1.
  double ball_excess = 0.0;

  bool ok() const { return interp_ok && ball_ok; }
};

/// Checks the interpolation condition on the coefficients 0..order of H and
/// membership of the truncated H in the H^2 ball, both with tolerance
/// tol.identity_tol.
SolutionReport is_solution(const InterpProblem& p, const TaylorSeries& h,
                           const Tolerances& tol = {});

struct UniquenessVerdict {
  enum class Kind { UniqueByI, UniqueByII, NotUnique };
  Kind kind = Kind::NotUnique;
  /// First n at which omega1 (Pi_F omega2)^n is not a co-isometry, for
  /// NotUnique; -1 otherwise.
  int failing_n = -1;

  bool unique() const { return kind != Kind::NotUnique; }
};

const char* to_string(UniquenessVerdict::Kind k);

/// Decides whether the problem has exactly one solution.
///
/// F = U gives UniqueByI. Otherwise, in finite dimension, the co-isometry
/// of omega1 (Pi_F omega2)^n for every n holds exactly when Y = {0}
/// (UniqueByII). For Y != {0} the co-isometric powers would map mutually
/// orthogonal y_dim-dimensional subspaces of F, so a failure must occur at
/// some n <= floor(dim F / y_dim); the scan stops there and throws
/// InternalContradiction if it does not find one.
UniquenessVerdict uniqueness(const InterpProblem& p, const Tolerances& tol = {});

/// Whether Gamma_{H_c} Gamma_{H_c}* = I, checked entrywise as
/// h_i h_j* = delta_ij I for 0 <= i, j <= order.
bool condition_ii_prime(const InterpProblem& p, int order,
                        const Tolerances& tol = {});

/// Smallest order accepted by condition_ii_prime.
int condition_ii_prime_min_order(const InterpProblem& p);

struct Witness {
  /// Constant Schur parameter G -> D_{omega*} (coordinates of the
  /// realization's bases).
  CMatrix v;
  TaylorSeries solution;  ///< H_V
  TaylorSeries central;   ///< H_c
  double gap = 0.0;       ///< max_n ||H_V,n - H_c,n||
  int first_difference = -1;
  Complex lambda{0.0, 0.0};  ///< evaluation point used by the construction
  bool from_random_search = false;
};

/// A second solution next to H_c when one exists.
///
/// The constant parameter is the rank-one contraction V = delta h v* /
/// ||v||^2 with v = Phi12(l) u + delta Phi11(l) h, which solves
/// V (I - Phi11(l) V)^{-1} Phi12(l) u = delta h. Points l are taken from a
/// fixed grid with |l| <= 0.6, u and h are top singular vectors of
/// Phi12(l) and Phi21(l), and delta = ||Phi12(l) u|| / (||Phi11(l) h|| + 2)
/// keeps ||v|| >= 2 delta. If no grid point separates the coefficients
/// 0..order by more than 10 identity_tol, seeded random contractions are
/// tried.
std::optional<Witness> second_solution_witness(const InterpProblem& p,
                                               int order, std::uint64_t seed,
                                               const Tolerances& tol = {});

}  // namespace rclkit
