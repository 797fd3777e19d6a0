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

// Seeded generators of random problems, data sets and systems for tests,
// acceptance runs and benchmarks.

#pragma once

#include <cstdint>
#include <random>

#include "rclkit/dataset.hpp"
#include "rclkit/interp.hpp"
#include "rclkit/opcore.hpp"
#include "rclkit/sysco.hpp"

namespace rclkit::testing {

using Rng = std::mt19937_64;

CMatrix random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols);
CMatrix random_unitary(Rng& rng, Eigen::Index n);
/// rows x cols with orthonormal columns (rows >= cols).
CMatrix random_isometry(Rng& rng, Eigen::Index rows, Eigen::Index cols);
SubspaceBasis random_subspace(Rng& rng, Eigen::Index ambient, Eigen::Index dim);
/// Random matrix rescaled to the given spectral norm.
CMatrix random_contraction(Rng& rng, Eigen::Index rows, Eigen::Index cols,
                           double norm);
int uniform_int(Rng& rng, int lo, int hi);
double uniform_real(Rng& rng, double lo, double hi);

enum class OmegaKind { Strict, NormOne, Isometric, Coisometric };

struct ProblemShape {
  int u_dim = 4;
  int y_dim = 1;
  int f_dim = 2;
  OmegaKind kind = OmegaKind::Strict;
};

/// omega = [omega1; omega2] on a random F of the given shape. Coisometric
/// requires y_dim = 0 and f_dim = u_dim.
InterpProblem random_problem(Rng& rng, const ProblemShape& shape);

/// u_dim in [1, max_u], y_dim in [0, max_y], f_dim in [0, u_dim], mixed
/// omega kinds.
InterpProblem random_problem(Rng& rng, int max_u = 8, int max_y = 3);

/// Random co-isometric system (input_dim >= output_dim).
CoisometricSystem random_coisometric_system(Rng& rng, int state_dim,
                                            int input_dim, int output_dim);

enum class TpKind { Strict, Unitary, NormOne };

/// Krylov-type data with the relaxed preset R, Q from V^{n-1} to V^n
/// (V = C^v_dim): A = [X, c T' X, ..., (c T')^{n-1} X] rescaled to
/// a_norm, R = c [I; 0], Q = [0; I] with c = r_scale <= 1. Satisfies
/// T'AR = AQ and R*R <= Q*Q.
DataSet relaxed_rq_data(Rng& rng, int n, int v_dim, int hp_dim, double a_norm,
                        TpKind tp_kind, double r_scale = 1.0);

/// Classical data: R = I, Q = S unitary on C^k, A = [f(S); 0] commuting with
/// S, T' = diag(S, T2) with T2 a strict contraction on C^extra.
DataSet classical_data(Rng& rng, int k, int extra, double a_norm);

/// Q unitary (onto), R = S* Q, A = [f(S); 0], T' = diag(S, T2).
DataSet onto_q_data(Rng& rng, int k, int extra, double a_norm);

/// Backward-shift example truncated to U = C^n, Y = C, F = span(e_1..e_{n-1}):
/// omega1 picks e_1, omega2 maps e_k to e_{k-1} and e_1 to 0.
InterpProblem backward_shift_example(int n);

}  // namespace rclkit::testing
