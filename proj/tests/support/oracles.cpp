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

#include "oracles.hpp"

#include <cmath>

namespace rclkit::testing {

namespace {

// X (I - l Z) = K, solved through the transposed system.
CMatrix right_solve(const CMatrix& k, const CMatrix& z, Complex lambda) {
  const Eigen::Index n = z.rows();
  const CMatrix m = CMatrix::Identity(n, n) - lambda * z;
  return m.transpose().fullPivLu().solve(k.transpose()).transpose();
}

}  // namespace

CMatrix central_by_resolvent(const InterpProblem& p, Complex lambda) {
  const CMatrix pf = p.f().basis().adjoint();
  const CMatrix z = p.omega2() * pf;
  return right_solve(p.omega1() * pf, z, lambda);
}

CMatrix transfer_by_resolvent(const CMatrix& a, const CMatrix& b,
                              const CMatrix& c, const CMatrix& d,
                              Complex lambda) {
  return d + lambda * right_solve(c, a, lambda) * b;
}

double geometric_tail(double lead_norm, double z_norm, double lambda_abs,
                      int order) {
  const double q = z_norm * lambda_abs;
  return lead_norm * std::pow(q, order + 1) / (1.0 - q);
}

double norm_2x2_closed_form(const CMatrix& m) {
  const CMatrix g = m.adjoint() * m;
  const double a = g(0, 0).real();
  const double d = g(1, 1).real();
  const double off = std::abs(g(0, 1));
  const double top = 0.5 * (a + d) + std::sqrt(0.25 * (a - d) * (a - d) + off * off);
  return std::sqrt(top);
}

int svd_rank(const CMatrix& m) {
  if (m.size() == 0) return 0;
  const Eigen::VectorXd sv = Eigen::JacobiSVD<CMatrix>(m).singularValues();
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) r += sv(i) > 1e-9 * sv(0) ? 1 : 0;
  return r;
}

}  // namespace rclkit::testing
