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

#include "json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

namespace rclkit::cli {

namespace {

[[noreturn]] void fail(const std::string& what, const std::string& msg) {
  throw ParseError(what + ": " + msg);
}

Complex complex_from_json(const Json& j, const std::string& what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  fail(what, "expected a number or a [re, im] pair");
}

Eigen::Index dim_from_json(const Json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    fail(what, "expected a non-negative integer");
  }
  return static_cast<Eigen::Index>(j.get<long long>());
}

CMatrix rows_from_json(const Json& j, const std::string& what,
                       std::optional<Eigen::Index> rows,
                       std::optional<Eigen::Index> cols) {
  if (!j.is_array()) fail(what, "expected an array of rows");
  if (j.empty()) {
    const Eigen::Index r = rows.value_or(0);
    const Eigen::Index c = cols.value_or(0);
    if (r != 0 && c != 0) fail(what, "empty entries for a non-empty shape");
    return CMatrix(r, c);
  }
  const auto r = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array()) fail(what, "expected an array of rows");
  const auto c = static_cast<Eigen::Index>(j[0].size());
  CMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    const Json& row = j[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != c) {
      fail(what, "rows have different lengths");
    }
    for (Eigen::Index k = 0; k < c; ++k) {
      m(i, k) = complex_from_json(row[static_cast<size_t>(k)], what);
    }
  }
  return m;
}

const Json& field(const Json& obj, const char* key, const std::string& what) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(what, std::string("missing field \"") + key + "\"");
  return *it;
}

void write_value(std::ostream& os, const Json& j, int indent);

// Arrays nested at most three deep (a matrix of [re, im] pairs) stay on
// one line.
int array_depth(const Json& j) {
  if (!j.is_array()) return j.is_object() ? 100 : 0;
  int depth = 0;
  for (const Json& e : j) depth = std::max(depth, array_depth(e));
  return depth + 1;
}

bool inline_array(const Json& j) { return array_depth(j) <= 3; }

void write_number(std::ostream& os, double x) {
  if (!std::isfinite(x)) {
    os << "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  os << buf;
}

void write_value(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<size_t>(indent) + 2, ' ');
  switch (j.type()) {
    case Json::value_t::number_float:
      write_number(os, j.get<double>());
      return;
    case Json::value_t::array: {
      if (inline_array(j)) {
        os << '[';
        for (size_t i = 0; i < j.size(); ++i) {
          if (i > 0) os << ", ";
          write_value(os, j[i], indent);
        }
        os << ']';
        return;
      }
      os << "[\n";
      for (size_t i = 0; i < j.size(); ++i) {
        os << pad;
        write_value(os, j[i], indent + 2);
        os << (i + 1 < j.size() ? ",\n" : "\n");
      }
      os << std::string(static_cast<size_t>(indent), ' ') << ']';
      return;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        os << pad << Json(it.key()).dump() << ": ";
        write_value(os, it.value(), indent + 2);
        os << (i + 1 < j.size() ? ",\n" : "\n");
      }
      os << std::string(static_cast<size_t>(indent), ' ') << '}';
      return;
    }
    default:
      os << j.dump();
  }
}

}  // namespace

CMatrix matrix_from_json(const Json& j, const std::string& what,
                         std::optional<Eigen::Index> rows,
                         std::optional<Eigen::Index> cols) {
  CMatrix m;
  if (j.is_object()) {
    const Eigen::Index r = dim_from_json(field(j, "rows", what), what + ".rows");
    const Eigen::Index c = dim_from_json(field(j, "cols", what), what + ".cols");
    m = rows_from_json(field(j, "entries", what), what, r, c);
    if (m.rows() != r || m.cols() != c) fail(what, "entries do not match rows/cols");
  } else {
    m = rows_from_json(j, what, rows, cols);
  }
  if ((rows && m.rows() != *rows) || (cols && m.cols() != *cols)) {
    fail(what, "has shape " + std::to_string(m.rows()) + "x" +
                   std::to_string(m.cols()) + ", expected " +
                   (rows ? std::to_string(*rows) : std::string("?")) + "x" +
                   (cols ? std::to_string(*cols) : std::string("?")));
  }
  return m;
}

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Json matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  if (m.rows() == 0 || m.cols() == 0) {
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", Json::array()}};
  }
  return rows;
}

MatrixSeries series_from_json(const Json& j, const std::string& what) {
  if (!j.is_object()) fail(what, "expected an object with \"coefficients\"");
  std::optional<Eigen::Index> rows;
  std::optional<Eigen::Index> cols;
  if (j.contains("rows")) rows = dim_from_json(j["rows"], what + ".rows");
  if (j.contains("cols")) cols = dim_from_json(j["cols"], what + ".cols");
  const Json& cj = field(j, "coefficients", what);
  if (!cj.is_array()) fail(what, "\"coefficients\" must be an array");
  std::vector<CMatrix> coeffs;
  for (size_t n = 0; n < cj.size(); ++n) {
    coeffs.push_back(matrix_from_json(cj[n], what + ".coefficients[" + std::to_string(n) + "]",
                                      rows, cols));
    rows = coeffs.back().rows();
    cols = coeffs.back().cols();
  }
  return MatrixSeries(rows.value_or(0), cols.value_or(0), std::move(coeffs));
}

Json series_to_json(const MatrixSeries& s) {
  Json coeffs = Json::array();
  for (const CMatrix& c : s.coeffs()) coeffs.push_back(matrix_to_json(c));
  return Json{{"rows", s.rows()},
              {"cols", s.cols()},
              {"order", s.order()},
              {"coefficients", std::move(coeffs)}};
}

Json tolerances_to_json(const Tolerances& tol) {
  return Json{{"rank_tol", tol.rank_tol},
              {"contraction_slack", tol.contraction_slack},
              {"identity_tol", tol.identity_tol}};
}

ProblemFile problem_from_json(const Json& j) {
  if (!j.is_object()) fail("problem", "top level must be an object");
  static const std::set<std::string> known = {"A", "Tprime", "R", "Q", "omega",
                                              "tolerances", "seed"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!known.count(it.key())) fail("problem", "unknown field \"" + it.key() + "\"");
  }
  const bool data_form = j.contains("A") || j.contains("Tprime") || j.contains("R") ||
                         j.contains("Q");
  const bool omega_form = j.contains("omega");
  if (data_form == omega_form) {
    fail("problem", "exactly one of the data-set form and the omega form is required");
  }
  ProblemFile f;
  if (data_form) {
    CMatrix a = matrix_from_json(field(j, "A", "problem"), "A");
    CMatrix tp = matrix_from_json(field(j, "Tprime", "problem"), "Tprime", a.rows(), a.rows());
    CMatrix r = matrix_from_json(field(j, "R", "problem"), "R", a.cols());
    CMatrix q = matrix_from_json(field(j, "Q", "problem"), "Q", a.cols(), r.cols());
    f.data = DataSet::make(std::move(a), std::move(tp), std::move(r), std::move(q));
  } else {
    const Json& o = j["omega"];
    if (!o.is_object()) fail("omega", "expected an object");
    OmegaParts parts;
    parts.u_dim = dim_from_json(field(o, "u_dim", "omega"), "omega.u_dim");
    const Eigen::Index y = dim_from_json(field(o, "y_dim", "omega"), "omega.y_dim");
    parts.f_basis = matrix_from_json(field(o, "F_basis", "omega"), "omega.F_basis", parts.u_dim);
    const Eigen::Index fd = parts.f_basis.cols();
    parts.omega1 = matrix_from_json(field(o, "omega1", "omega"), "omega.omega1", y, fd);
    parts.omega2 =
        matrix_from_json(field(o, "omega2", "omega"), "omega.omega2", parts.u_dim, fd);
    f.omega = std::move(parts);
  }
  if (j.contains("tolerances")) {
    const Json& t = j["tolerances"];
    if (!t.is_object()) fail("tolerances", "expected an object");
    for (auto it = t.begin(); it != t.end(); ++it) {
      if (!it.value().is_number()) fail("tolerances", it.key() + " must be a number");
      const double v = it.value().get<double>();
      if (it.key() == "rank_tol") {
        f.tol.rank_tol = v;
      } else if (it.key() == "contraction_slack") {
        f.tol.contraction_slack = v;
      } else if (it.key() == "identity_tol") {
        f.tol.identity_tol = v;
      } else {
        fail("tolerances", "unknown field \"" + it.key() + "\"");
      }
    }
    try {
      f.tol.check();
    } catch (const Error& e) {
      fail("tolerances", e.what());
    }
  }
  if (j.contains("seed")) {
    const Json& s = j["seed"];
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0)) {
      fail("seed", "expected a non-negative integer");
    }
    f.seed = s.get<std::uint64_t>();
  }
  return f;
}

InterpProblem build_problem(const ProblemFile& f) {
  if (f.data) return underlying_contraction(*f.data, f.tol);
  const OmegaParts& o = *f.omega;
  return InterpProblem::make(SubspaceBasis(o.u_dim, o.f_basis), o.omega1, o.omega2, f.tol);
}

Json problem_to_json(const InterpProblem& p) {
  return Json{{"u_dim", p.u_dim()},
              {"y_dim", p.y_dim()},
              {"F_basis", matrix_to_json(p.f().basis())},
              {"omega1", matrix_to_json(p.omega1())},
              {"omega2", matrix_to_json(p.omega2())}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_json(std::ostream& os, const Json& j) {
  write_value(os, j, 0);
  os << '\n';
}

}  // namespace rclkit::cli
