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
/// \file series.hpp
///
/// Truncated power series with matrix coefficients,
///
///   A(lambda) = A_0 + A_1 lambda + ... + A_N lambda^N.
///
/// Coefficients past the stored order are zero, so a constant matrix is a
/// series of order 0. Every operation takes its truncation order
/// explicitly.
///

#pragma once

#include <vector>

#include "rclkit/opcore.hpp"

namespace rclkit {

class MatrixSeries {
 public:
  MatrixSeries() = default;

  /// Zero series of the given shape and order.
  MatrixSeries(Eigen::Index rows, Eigen::Index cols, int order);

  /// All coefficients must share one shape; at least one is required.
  explicit MatrixSeries(std::vector<CMatrix> coeffs);

  /// Series from an explicit coefficient list; an empty list gives the
  /// zero series of order 0 with the stated shape.
  MatrixSeries(Eigen::Index rows, Eigen::Index cols,
               std::vector<CMatrix> coeffs);

  static MatrixSeries constant(const CMatrix& value, int order = 0);
  static MatrixSeries identity(Eigen::Index n, int order = 0);

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient n; zero past the stored order.
  CMatrix coeff(int n) const;
  const std::vector<CMatrix>& coeffs() const { return coeffs_; }
  CMatrix& operator[](int n) { return coeffs_.at(static_cast<size_t>(n)); }
  const CMatrix& operator[](int n) const {
    return coeffs_.at(static_cast<size_t>(n));
  }

  /// Horner evaluation of the stored polynomial.
  CMatrix evaluate(Complex lambda) const;

  /// Largest coefficient spectral norm.
  double max_coeff_norm() const;

 private:
  Eigen::Index rows_ = 0;
  Eigen::Index cols_ = 0;
  std::vector<CMatrix> coeffs_ = {CMatrix(0, 0)};
};

/// Keep coefficients 0..n (padding with zeros when n exceeds the order).
MatrixSeries truncate(const MatrixSeries& a, int n);

MatrixSeries add(const MatrixSeries& a, const MatrixSeries& b, int n);
MatrixSeries sub(const MatrixSeries& a, const MatrixSeries& b, int n);
MatrixSeries scale(const MatrixSeries& a, Complex c);

/// Cauchy product truncated at order n.
MatrixSeries mul(const MatrixSeries& a, const MatrixSeries& b, int n);

/// Inverse in the truncated algebra. The constant term must be square and
/// invertible; its 2-norm condition number above 1e14 is rejected.
MatrixSeries inv(const MatrixSeries& a, int n);

/// Multiply by lambda^k; the order grows by k.
MatrixSeries shift(const MatrixSeries& a, int k);

/// 2-norm condition number of the constant term (inf if singular).
double constant_term_condition(const MatrixSeries& a);

/// Lower-triangular block Toeplitz matrix with `blocks` block rows built
/// from the coefficients: the finite section of the multiplication
/// operator on H^2.
CMatrix block_toeplitz(const MatrixSeries& a, int blocks);

/// Coefficients 0..blocks-1 stacked vertically: the finite section of the
/// map u -> A(.)u into H^2.
CMatrix stacked_column(const MatrixSeries& a, int blocks);

/// Partial Gram sum_{n <= order} A_n* A_n.
CMatrix partial_gram(const MatrixSeries& a);

/// Largest spectral norm of the coefficient differences over 0..n, and the
/// first index where that difference exceeds `threshold` (-1 if none).
struct SeriesGap {
  double max_gap = 0.0;
  int first_index = -1;
};
SeriesGap series_gap(const MatrixSeries& a, const MatrixSeries& b, int n,
                     double threshold);

}  // namespace rclkit
