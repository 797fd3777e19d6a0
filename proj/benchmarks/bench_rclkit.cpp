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

#include <benchmark/benchmark.h>

#include <random>

#include "rclkit/rclkit.hpp"

namespace {

using namespace rclkit;

CMatrix gaussian(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c) {
  std::normal_distribution<double> n;
  CMatrix m(r, c);
  for (Eigen::Index j = 0; j < c; ++j) {
    for (Eigen::Index i = 0; i < r; ++i) m(i, j) = Complex(n(rng), n(rng));
  }
  return m;
}

InterpProblem make_problem(int u, int y, int f, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  Eigen::HouseholderQR<CMatrix> qr(gaussian(rng, u, f));
  const CMatrix basis = qr.householderQ() * CMatrix::Identity(u, f);
  CMatrix omega = gaussian(rng, y + u, f);
  omega *= 0.9 / spectral_norm(omega);
  return InterpProblem::make(SubspaceBasis(u, basis), omega.topRows(y), omega.bottomRows(u));
}

DataSet make_data(int n, int hp, std::uint64_t seed = 2) {
  std::mt19937_64 rng(seed);
  CMatrix tp = gaussian(rng, hp, hp);
  tp *= 0.8 / spectral_norm(tp);
  CMatrix a(hp, n);
  CMatrix x = gaussian(rng, hp, 1);
  for (int k = 0; k < n; ++k) {
    a.col(k) = x;
    x = (tp * x).eval();
  }
  a *= 0.9 / spectral_norm(a);
  const RqPair rq = preset_relaxed_rq(n, 1);
  return DataSet::make(a, tp, rq.r, rq.q);
}

void BM_CentralTaylor(benchmark::State& state) {
  const InterpProblem p = make_problem(8, 3, 5);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(central_taylor(p, order));
}
BENCHMARK(BM_CentralTaylor)->Arg(16)->Arg(32)->Arg(64);

void BM_Uniqueness(benchmark::State& state) {
  const InterpProblem p = make_problem(8, 1, 7);
  for (auto _ : state) benchmark::DoNotOptimize(uniqueness(p));
}
BENCHMARK(BM_Uniqueness);

void BM_Witness(benchmark::State& state) {
  const InterpProblem p = make_problem(6, 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(second_solution_witness(p, 16, 1));
}
BENCHMARK(BM_Witness);

void BM_CoefficientAudit(benchmark::State& state) {
  const RedhefferRealization r = realize(make_problem(5, 2, 3));
  const int blocks = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coefficient_matrix_report(r, blocks));
}
BENCHMARK(BM_CoefficientAudit)->Arg(8)->Arg(16)->Arg(32);

void BM_LftSolution(benchmark::State& state) {
  const RedhefferRealization r = realize(make_problem(6, 2, 3));
  std::mt19937_64 rng(3);
  CMatrix v = gaussian(rng, r.d_dim(), r.g_dim());
  v *= 0.9 / spectral_norm(v);
  const SchurParameter param = SchurParameter::constant(v);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lft_solution(r, param, order));
}
BENCHMARK(BM_LftSolution)->Arg(16)->Arg(32);

void BM_StIdentity(benchmark::State& state) {
  std::mt19937_64 rng(4);
  CMatrix a = gaussian(rng, 5, 5);
  a *= 0.9 / spectral_norm(a);
  const CoisometricSystem s = julia_system(a);
  for (auto _ : state) benchmark::DoNotOptimize(st_identity_report(s, 12));
}
BENCHMARK(BM_StIdentity);

void BM_LiftingRoundTrip(benchmark::State& state) {
  const DataSet d = make_data(4, 3);
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const CMatrix b = interpolant_from_solution(d, central_taylor(underlying_contraction(d), m - 1), m);
    benchmark::DoNotOptimize(verify_rclt(d, b, m));
  }
}
BENCHMARK(BM_LiftingRoundTrip)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
