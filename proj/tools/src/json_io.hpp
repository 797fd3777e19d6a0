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

// JSON encoding of matrices, series and problem files.
//
// Complex scalars are two-element arrays [re, im]; a plain number is read as
// a real scalar. Matrices are row-major nested arrays, or the object form
// {"rows": r, "cols": c, "entries": [...]} which is also used on output
// whenever a dimension is zero.

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "rclkit/rclkit.hpp"

namespace rclkit::cli {

using Json = nlohmann::json;

/// Malformed input: bad JSON, missing fields, wrong types or shapes.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads a matrix. An empty array takes the expected shape when given.
CMatrix matrix_from_json(const Json& j, const std::string& what,
                         std::optional<Eigen::Index> rows = std::nullopt,
                         std::optional<Eigen::Index> cols = std::nullopt);
Json matrix_to_json(const CMatrix& m);
Json complex_to_json(Complex c);

/// {"rows", "cols", "coefficients": [...]}.
MatrixSeries series_from_json(const Json& j, const std::string& what);
Json series_to_json(const MatrixSeries& s);

/// The "omega" object as read, before the contraction check.
struct OmegaParts {
  Eigen::Index u_dim = 0;
  CMatrix f_basis;
  CMatrix omega1;
  CMatrix omega2;
};

struct ProblemFile {
  std::optional<DataSet> data;
  std::optional<OmegaParts> omega;
  Tolerances tol;
  std::uint64_t seed = 0;
};

/// Parses a problem document. Exactly one of the data-set fields
/// ("A", "Tprime", "R", "Q") and the "omega" object must be present.
/// Shapes are checked here; mathematical constraints are not.
ProblemFile problem_from_json(const Json& j);
/// The interpolation problem of a file: the underlying contraction for the
/// data-set form. Throws library errors for invalid content.
InterpProblem build_problem(const ProblemFile& f);
Json problem_to_json(const InterpProblem& p);
Json tolerances_to_json(const Tolerances& tol);

Json read_json_file(const std::string& path);

/// Writes JSON with object keys in sorted order, integers verbatim and
/// floating point values in scientific notation with 17 significant
/// digits.
void write_json(std::ostream& os, const Json& j);

}  // namespace rclkit::cli
