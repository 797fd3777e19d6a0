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

#include "rclkit/interp.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

#include "rclkit/errors.hpp"
#include "rclkit/redheffer.hpp"

namespace rclkit {

InterpProblem InterpProblem::make(SubspaceBasis f, CMatrix omega1,
                                  CMatrix omega2, const Tolerances& tol) {
  tol.check();
  if (omega1.cols() != f.dim() || omega2.cols() != f.dim()) {
    throw DimensionMismatch("omega columns must match dim F");
  }
  if (omega2.rows() != f.ambient_dim()) {
    throw DimensionMismatch("omega2 rows must match dim U");
  }
  require_finite(omega1, "omega1");
  require_finite(omega2, "omega2");
  require_contraction(vstack(omega1, omega2), tol, "omega");
  return InterpProblem(std::move(f), std::move(omega1), std::move(omega2));
}

CMatrix InterpProblem::state_operator() const {
  return omega2_ * f_.basis().adjoint();
}

CMatrix InterpProblem::compressed_state() const {
  return f_.basis().adjoint() * omega2_;
}

TaylorSeries central_taylor(const InterpProblem& p, int order) {
  if (order < 0) throw InvalidInput("central_taylor: negative order");
  const CMatrix z = p.state_operator();
  TaylorSeries h(p.y_dim(), p.u_dim(), order);
  h[0] = p.omega1() * p.f().basis().adjoint();
  for (int n = 0; n < order; ++n) h[n + 1] = h[n] * z;
  return h;
}

SolutionReport is_solution(const InterpProblem& p, const TaylorSeries& h,
                           const Tolerances& tol) {
  if (h.rows() != p.y_dim() || h.cols() != p.u_dim()) {
    throw DimensionMismatch("is_solution: series shape must be y_dim x u_dim");
  }
  const CMatrix& fb = p.f().basis();
  SolutionReport r;
  auto record = [&](int n, double res) {
    r.interp_residual = std::max(r.interp_residual, res);
    if (res > tol.identity_tol && r.first_failure < 0) r.first_failure = n;
  };
  record(0, spectral_norm(h[0] * fb - p.omega1()));
  for (int n = 0; n < h.order(); ++n) {
    record(n + 1, spectral_norm(h[n + 1] * fb - h[n] * p.omega2()));
  }
  r.interp_ok = r.first_failure < 0;

  const CMatrix gram = partial_gram(h);
  if (gram.rows() > 0) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(gram),
                                              Eigen::EigenvaluesOnly);
    r.ball_excess = es.eigenvalues()(gram.rows() - 1) - 1.0;
  } else {
    r.ball_excess = -1.0;
  }
  r.ball_ok = r.ball_excess <= tol.identity_tol;
  return r;
}

const char* to_string(UniquenessVerdict::Kind k) {
  switch (k) {
    case UniquenessVerdict::Kind::UniqueByI:
      return "unique_i";
    case UniquenessVerdict::Kind::UniqueByII:
      return "unique_ii";
    case UniquenessVerdict::Kind::NotUnique:
      return "not_unique";
  }
  return "unknown";
}

UniquenessVerdict uniqueness(const InterpProblem& p, const Tolerances& tol) {
  using Kind = UniquenessVerdict::Kind;
  if (p.f_dim() == p.u_dim()) return {Kind::UniqueByI, -1};
  if (p.y_dim() == 0) return {Kind::UniqueByII, -1};

  const auto bound = static_cast<int>(p.f_dim() / p.y_dim());
  const CMatrix step = p.compressed_state();
  CMatrix power = p.omega1();  // omega1 (Pi_F omega2)^n on F
  for (int n = 0; n <= bound; ++n) {
    if (!is_coisometry(power, tol)) return {Kind::NotUnique, n};
    power = (power * step).eval();
  }
  std::ostringstream os;
  os << "omega1 (Pi_F omega2)^n stayed co-isometric for n <= " << bound
     << " with dim F = " << p.f_dim() << ", dim Y = " << p.y_dim()
     << "; identity_tol is too loose";
  throw InternalContradiction(os.str());
}

int condition_ii_prime_min_order(const InterpProblem& p) {
  return static_cast<int>(p.f_dim() / std::max<Eigen::Index>(1, p.y_dim())) + 1;
}

bool condition_ii_prime(const InterpProblem& p, int order,
                        const Tolerances& tol) {
  if (order < condition_ii_prime_min_order(p)) {
    throw InvalidInput("condition_ii_prime: order below floor(dim F / dim Y) + 1");
  }
  if (p.y_dim() == 0) return true;
  const TaylorSeries h = central_taylor(p, order);
  const Eigen::Index y = p.y_dim();
  for (int i = 0; i <= order; ++i) {
    for (int j = 0; j <= i; ++j) {
      CMatrix block = h[i] * h[j].adjoint();
      if (i == j) block -= CMatrix::Identity(y, y);
      if (spectral_norm(block) > tol.identity_tol) return false;
    }
  }
  return true;
}

namespace {

CVector top_right_singular_vector(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  return svd.matrixV().col(0);
}

struct Candidate {
  CMatrix v;
  TaylorSeries solution;
  SeriesGap gap;
  Complex lambda;
};

}  // namespace

std::optional<Witness> second_solution_witness(const InterpProblem& p,
                                               int order, std::uint64_t seed,
                                               const Tolerances& tol) {
  if (order < 0) throw InvalidInput("second_solution_witness: negative order");
  if (uniqueness(p, tol).unique()) return std::nullopt;

  const RedhefferRealization r = realize(p, tol);
  const TaylorSeries central = central_taylor(p, order);
  const double threshold = 10.0 * tol.identity_tol;
  const Eigen::Index d = r.d_dim();
  const Eigen::Index g = r.g_dim();
  if (d == 0 || g == 0) {
    throw InternalContradiction(
        "non-unique problem with an empty parameter space");
  }

  auto evaluate = [&](CMatrix v, Complex lambda) {
    TaylorSeries h = lft_solution(r, SchurParameter::constant(v), order, tol);
    SeriesGap gap = series_gap(h, central, order, threshold);
    return Candidate{std::move(v), std::move(h), gap, lambda};
  };

  const std::array<Complex, 9> grid = {
      Complex(0.0, 0.0),  Complex(0.3, 0.0),  Complex(-0.3, 0.0),
      Complex(0.0, 0.3),  Complex(0.0, -0.3), Complex(0.6, 0.0),
      Complex(-0.6, 0.0), Complex(0.0, 0.6),  Complex(0.0, -0.6)};

  std::optional<Candidate> best;
  for (const Complex lambda : grid) {
    const PhiValues phi = phi_eval(r, lambda);
    const CVector u = top_right_singular_vector(phi.phi12);
    const CVector target = phi.phi12 * u;
    const double target_norm = target.norm();
    if (target_norm <= tol.rank_tol) continue;

    const CVector h = top_right_singular_vector(phi.phi21);
    const double delta = target_norm / ((phi.phi11 * h).norm() + 2.0);
    const CVector v = target + delta * (phi.phi11 * h);
    const CMatrix param = (delta / v.squaredNorm()) * h * v.adjoint();

    Candidate c = evaluate(param, lambda);
    if (!best || c.gap.max_gap > best->gap.max_gap) best = std::move(c);
  }

  bool random = false;
  if (!best || best->gap.max_gap <= threshold) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    for (int attempt = 0; attempt < 64; ++attempt) {
      CMatrix param(d, g);
      for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < g; ++j) {
          param(i, j) = Complex(normal(rng), normal(rng));
        }
      }
      param *= 0.9 / spectral_norm(param);
      Candidate c = evaluate(std::move(param), Complex(0.0, 0.0));
      if (c.gap.max_gap > threshold) {
        best = std::move(c);
        random = true;
        break;
      }
    }
  }
  if (!best || best->gap.max_gap <= threshold) {
    std::ostringstream os;
    os << "no parameter separates H_V from H_c within order " << order;
    throw InternalContradiction(os.str());
  }

  Witness w;
  w.v = std::move(best->v);
  w.solution = std::move(best->solution);
  w.central = central;
  w.gap = best->gap.max_gap;
  w.first_difference = best->gap.first_index;
  w.lambda = best->lambda;
  w.from_random_search = random;
  return w;
}

}  // namespace rclkit
