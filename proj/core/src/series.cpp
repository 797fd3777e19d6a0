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

#include "rclkit/series.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "rclkit/errors.hpp"

namespace rclkit {

namespace {

void require_order(int n) {
  if (n < 0) throw InvalidInput("series order must be non-negative");
}

void require_same_shape(const MatrixSeries& a, const MatrixSeries& b,
                        const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(op) + ": series shapes differ");
  }
}

}  // namespace

MatrixSeries::MatrixSeries(Eigen::Index rows, Eigen::Index cols, int order)
    : rows_(rows), cols_(cols) {
  require_order(order);
  coeffs_.assign(static_cast<size_t>(order) + 1, CMatrix::Zero(rows, cols));
}

MatrixSeries::MatrixSeries(std::vector<CMatrix> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw InvalidInput("series needs at least one coefficient");
  }
  rows_ = coeffs_.front().rows();
  cols_ = coeffs_.front().cols();
  for (const auto& c : coeffs_) {
    if (c.rows() != rows_ || c.cols() != cols_) {
      throw DimensionMismatch("series coefficients have different shapes");
    }
    require_finite(c, "series coefficient");
  }
}

MatrixSeries::MatrixSeries(Eigen::Index rows, Eigen::Index cols,
                           std::vector<CMatrix> coeffs)
    : rows_(rows), cols_(cols), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(CMatrix::Zero(rows, cols));
  for (const auto& c : coeffs_) {
    if (c.rows() != rows_ || c.cols() != cols_) {
      throw DimensionMismatch("series coefficients have different shapes");
    }
    require_finite(c, "series coefficient");
  }
}

MatrixSeries MatrixSeries::constant(const CMatrix& value, int order) {
  MatrixSeries s(value.rows(), value.cols(), order);
  s.coeffs_[0] = value;
  return s;
}

MatrixSeries MatrixSeries::identity(Eigen::Index n, int order) {
  return constant(CMatrix::Identity(n, n), order);
}

CMatrix MatrixSeries::coeff(int n) const {
  if (n < 0 || n > order()) return CMatrix::Zero(rows_, cols_);
  return coeffs_[static_cast<size_t>(n)];
}

CMatrix MatrixSeries::evaluate(Complex lambda) const {
  CMatrix acc = coeffs_.back();
  for (int n = order() - 1; n >= 0; --n) {
    acc = (acc * lambda + coeffs_[static_cast<size_t>(n)]).eval();
  }
  return acc;
}

double MatrixSeries::max_coeff_norm() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, spectral_norm(c));
  return m;
}

MatrixSeries truncate(const MatrixSeries& a, int n) {
  require_order(n);
  MatrixSeries out(a.rows(), a.cols(), n);
  for (int k = 0; k <= std::min(n, a.order()); ++k) out[k] = a[k];
  return out;
}

MatrixSeries add(const MatrixSeries& a, const MatrixSeries& b, int n) {
  require_order(n);
  require_same_shape(a, b, "add");
  MatrixSeries out(a.rows(), a.cols(), n);
  for (int k = 0; k <= n; ++k) out[k] = a.coeff(k) + b.coeff(k);
  return out;
}

MatrixSeries sub(const MatrixSeries& a, const MatrixSeries& b, int n) {
  require_order(n);
  require_same_shape(a, b, "sub");
  MatrixSeries out(a.rows(), a.cols(), n);
  for (int k = 0; k <= n; ++k) out[k] = a.coeff(k) - b.coeff(k);
  return out;
}

MatrixSeries scale(const MatrixSeries& a, Complex c) {
  MatrixSeries out = a;
  for (int k = 0; k <= out.order(); ++k) out[k] *= c;
  return out;
}

MatrixSeries mul(const MatrixSeries& a, const MatrixSeries& b, int n) {
  require_order(n);
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("mul: inner dimensions differ");
  }
  MatrixSeries out(a.rows(), b.cols(), n);
  for (int k = 0; k <= n; ++k) {
    const int lo = std::max(0, k - b.order());
    const int hi = std::min(k, a.order());
    for (int i = lo; i <= hi; ++i) out[k].noalias() += a[i] * b[k - i];
  }
  return out;
}

double constant_term_condition(const MatrixSeries& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  if (a.rows() == 0) return 1.0;
  const CMatrix& a0 = a[0];
  require_finite(a0, "constant term");
  Eigen::JacobiSVD<CMatrix> svd(a0);
  const auto& sv = svd.singularValues();
  const double lo = sv(sv.size() - 1);
  if (lo == 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / lo;
}

MatrixSeries inv(const MatrixSeries& a, int n) {
  require_order(n);
  if (a.rows() != a.cols()) {
    throw DimensionMismatch("inv: series is not square");
  }
  const double cond = constant_term_condition(a);
  if (!(cond <= 1e14)) {
    std::ostringstream os;
    os << "inv: constant term is singular (condition " << cond << ")";
    throw NotInvertible(os.str());
  }
  const Eigen::Index m = a.rows();
  MatrixSeries out(m, m, n);
  if (m == 0) return out;
  Eigen::PartialPivLU<CMatrix> lu(a[0]);
  out[0] = lu.inverse();
  // A_0 X_k = -sum_{i=1}^{k} A_i X_{k-i}
  for (int k = 1; k <= n; ++k) {
    CMatrix rhs = CMatrix::Zero(m, m);
    for (int i = 1; i <= std::min(k, a.order()); ++i) {
      rhs.noalias() += a[i] * out[k - i];
    }
    out[k] = -lu.solve(rhs);
  }
  return out;
}

MatrixSeries shift(const MatrixSeries& a, int k) {
  if (k < 0) throw InvalidInput("shift: negative power");
  MatrixSeries out(a.rows(), a.cols(), a.order() + k);
  for (int i = 0; i <= a.order(); ++i) out[i + k] = a[i];
  return out;
}

CMatrix block_toeplitz(const MatrixSeries& a, int blocks) {
  if (blocks < 0) throw InvalidInput("block_toeplitz: negative block count");
  const Eigen::Index r = a.rows();
  const Eigen::Index c = a.cols();
  CMatrix t = CMatrix::Zero(r * blocks, c * blocks);
  for (int i = 0; i < blocks; ++i) {
    for (int j = 0; j <= std::min(i, blocks - 1); ++j) {
      if (i - j > a.order()) continue;
      t.block(i * r, j * c, r, c) = a[i - j];
    }
  }
  return t;
}

CMatrix stacked_column(const MatrixSeries& a, int blocks) {
  if (blocks < 0) throw InvalidInput("stacked_column: negative block count");
  const Eigen::Index r = a.rows();
  CMatrix g = CMatrix::Zero(r * blocks, a.cols());
  for (int i = 0; i < std::min(blocks, a.order() + 1); ++i) {
    g.middleRows(i * r, r) = a[i];
  }
  return g;
}

CMatrix partial_gram(const MatrixSeries& a) {
  CMatrix g = CMatrix::Zero(a.cols(), a.cols());
  for (const auto& c : a.coeffs()) g.noalias() += c.adjoint() * c;
  return g;
}

SeriesGap series_gap(const MatrixSeries& a, const MatrixSeries& b, int n,
                     double threshold) {
  require_same_shape(a, b, "series_gap");
  SeriesGap gap;
  for (int k = 0; k <= n; ++k) {
    const double d = spectral_norm(a.coeff(k) - b.coeff(k));
    if (d > threshold && gap.first_index < 0) gap.first_index = k;
    gap.max_gap = std::max(gap.max_gap, d);
  }
  return gap;
}

}  // namespace rclkit
