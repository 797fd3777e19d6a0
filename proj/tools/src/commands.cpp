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

#include "commands.hpp"

#include <cstdlib>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "json_io.hpp"

namespace rclkit::cli {

namespace {

struct Options {
  std::string file;
  int order = 32;
  bool witness = false;
  std::optional<std::uint64_t> seed;
  std::string param;
  std::string solution;
  std::optional<int> blocks;
  std::string system;
};

void apply_env_tolerance(Tolerances& tol) {
  const char* env = std::getenv("RCLKIT_TOL");
  if (env == nullptr) return;
  const std::string s(env);
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !(v >= 0.0)) {
    throw ParseError("RCLKIT_TOL: expected a non-negative number, got \"" + s + "\"");
  }
  tol.identity_tol = v;
}

ProblemFile load(const Options& o) {
  ProblemFile f = problem_from_json(read_json_file(o.file));
  apply_env_tolerance(f.tol);
  return f;
}

Json violation_json(const std::string& name, double residual) {
  return Json{{"constraint", name}, {"residual", residual}};
}

Json decision_json(const UniquenessDecision& d) {
  return Json{{"decision", to_string(d.kind)}, {"reason", d.reason}};
}

int cmd_validate(const Options& o, std::ostream& out) {
  const ProblemFile f = load(o);
  Json j;
  bool valid = true;
  Json violations = Json::array();
  if (f.data) {
    const ValidationReport rep = validate(*f.data, f.tol);
    for (const Violation& v : rep.violations) {
      violations.push_back(violation_json(v.constraint, v.residual));
    }
    j["form"] = "dataset";
    j["intertwining_residual"] = rep.intertwining_residual;
    j["order_residual"] = rep.order_residual;
    j["a_norm"] = rep.a_norm;
    j["tp_norm"] = rep.tp_norm;
    valid = rep.ok();
    if (valid) {
      try {
        const UnderlyingContraction u = underlying_contraction_full(*f.data, f.tol);
        j["underlying_contraction"] = Json{{"u_dim", u.problem.u_dim()},
                                           {"y_dim", u.problem.y_dim()},
                                           {"f_dim", u.problem.f_dim()},
                                           {"identity_residual", u.identity_residual},
                                           {"omega_norm", spectral_norm(u.problem.omega())}};
      } catch (const IllPosedData& e) {
        valid = false;
        violations.push_back(violation_json("underlying contraction", 0.0));
        j["error"] = e.what();
      }
    }
  } else {
    const OmegaParts& parts = *f.omega;
    j["form"] = "omega";
    const double nrm = spectral_norm(vstack(parts.omega1, parts.omega2));
    j["omega_norm"] = nrm;
    try {
      SubspaceBasis(parts.u_dim, parts.f_basis);
    } catch (const InvalidInput& e) {
      valid = false;
      const CMatrix& b = parts.f_basis;
      violations.push_back(violation_json(
          "F_basis orthonormal",
          spectral_norm(b.adjoint() * b - CMatrix::Identity(b.cols(), b.cols()))));
    }
    if (nrm > 1.0 + f.tol.contraction_slack) {
      valid = false;
      violations.push_back(violation_json("omega contraction", nrm - 1.0));
    }
  }
  j["valid"] = valid;
  j["violations"] = std::move(violations);
  write_json(out, j);
  return valid ? 0 : 1;
}

int cmd_omega(const Options& o, std::ostream& out) {
  const ProblemFile f = load(o);
  const InterpProblem p = build_problem(f);
  write_json(out, Json{{"omega", problem_to_json(p)}, {"tolerances", tolerances_to_json(f.tol)}});
  return 0;
}

int cmd_central(const Options& o, std::ostream& out) {
  const ProblemFile f = load(o);
  write_json(out, series_to_json(central_taylor(build_problem(f), o.order)));
  return 0;
}

int cmd_unique(const Options& o, std::ostream& out) {
  const ProblemFile f = load(o);
  const InterpProblem p = build_problem(f);
  const UniquenessVerdict v = uniqueness(p, f.tol);
  Json j{{"verdict", to_string(v.kind)}};
  if (!v.unique()) j["failing_n"] = v.failing_n;
  if (o.witness) {
    const std::uint64_t seed = o.seed.value_or(f.seed);
    const auto w = second_solution_witness(p, o.order, seed, f.tol);
    if (w) {
      j["witness"] = Json{{"v", matrix_to_json(w->v)},
                          {"gap", w->gap},
                          {"first_difference", w->first_difference},
                          {"lambda", complex_to_json(w->lambda)},
                          {"from_random_search", w->from_random_search},
                          {"seed", seed},
                          {"solution", series_to_json(w->solution)}};
    } else {
      j["witness"] = nullptr;
    }
  }
  if (f.data) {
    j["corollaries"] = Json{{"suboptimal", decision_json(suboptimal_uniqueness(*f.data, f.tol))},
                            {"norm_one_rq", decision_json(norm_one_rq_uniqueness(*f.data, f.tol))}};
  }
  write_json(out, j);
  return 0;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const ProblemFile f = load(o);
  const RedhefferRealization r = realize(build_problem(f), f.tol);
  const Json pj = read_json_file(o.param);
  if (!pj.is_object()) throw ParseError(o.param + ": expected an object");
  std::optional<SchurParameter> v;
  if (pj.contains("V")) {
    v = SchurParameter::constant(matrix_from_json(pj["V"], "V", r.d_dim(), r.g_dim()));
  } else if (pj.contains("coefficients")) {
    const MatrixSeries s = series_from_json(pj, "V");
    v = SchurParameter::polynomial(s.coeffs());
  } else {
    throw ParseError(o.param + ": expected \"V\" or \"coefficients\"");
  }
  write_json(out, series_to_json(lft_solution(r, *v, o.order, f.tol)));
  return 0;
}

Json solution_report_json(const SolutionReport& r) {
  return Json{{"interp_ok", r.interp_ok},         {"ball_ok", r.ball_ok},
              {"interp_residual", r.interp_residual}, {"first_failure", r.first_failure},
              {"ball_excess", r.ball_excess},     {"ok", r.ok()}};
}

int cmd_verify(const Options& o, std::ostream& out) {
  const ProblemFile f = load(o);
  const InterpProblem p = build_problem(f);
  const MatrixSeries h = series_from_json(read_json_file(o.solution), "solution");
  if (h.rows() != p.y_dim() || h.cols() != p.u_dim()) {
    throw ParseError(o.solution + ": coefficients must be " + std::to_string(p.y_dim()) +
                     "x" + std::to_string(p.u_dim()));
  }
  const SolutionReport rep = is_solution(p, h, f.tol);
  Json j = solution_report_json(rep);
  bool ok = rep.ok();
  if (f.data) {
    const int blocks = o.blocks.value_or(h.order() + 1);
    try {
      const CMatrix b = interpolant_from_solution(*f.data, h, blocks, f.tol);
      const RcltReport rc = verify_rclt(*f.data, b, blocks, f.tol);
      j["rclt"] = Json{{"blocks", blocks},
                       {"projection_ok", rc.projection_ok},
                       {"intertwine_ok", rc.intertwine_ok},
                       {"boundary_blocks_excluded", rc.boundary_blocks_excluded},
                       {"projection_residual", rc.projection_residual},
                       {"intertwine_residual", rc.intertwine_residual},
                       {"boundary_residual", rc.boundary_residual},
                       {"b_norm", spectral_norm(b)}};
      ok = ok && rc.ok();
    } catch (const NotContractive& e) {
      j["rclt"] = Json{{"blocks", blocks}, {"error", e.what()}};
      ok = false;
    }
  }
  write_json(out, j);
  return ok ? 0 : 1;
}

int cmd_audit(const Options& o, std::ostream& out) {
  const ProblemFile f = load(o);
  const RedhefferRealization r = realize(build_problem(f), f.tol);
  const CoefficientAuditReport rep = coefficient_matrix_report(r, o.order);
  bool ok = rep.row_gram_deviation <= f.tol.identity_tol;
  Json j;
  j["redheffer_deficiency"] = Json{{"blocks", rep.blocks},
                                   {"row_gram_deviation", rep.row_gram_deviation},
                                   {"column_gram_deviation", rep.column_gram_deviation},
                                   {"passed", ok}};
  if (!o.system.empty()) {
    const Json s = read_json_file(o.system);
    if (!s.is_object()) throw ParseError(o.system + ": expected an object");
    const CMatrix a = matrix_from_json(s.value("A", Json()), "A");
    const CMatrix b = matrix_from_json(s.value("B", Json()), "B", a.rows());
    const CMatrix c = matrix_from_json(s.value("C", Json()), "C", std::nullopt, a.cols());
    const CMatrix d = matrix_from_json(s.value("D", Json()), "D", c.rows(), b.cols());
    const auto sys = CoisometricSystem::unchecked(a, b, c, d);
    const StAuditReport st = st_identity_report(sys, o.order);
    const bool st_ok = st.max_deviation <= f.tol.identity_tol;
    j["st_identity"] = Json{{"blocks", st.blocks},
                            {"max_deviation", st.max_deviation},
                            {"max_diagonal_deviation", st.max_diagonal_deviation},
                            {"max_offdiagonal", st.max_offdiagonal},
                            {"passed", st_ok}};
    ok = ok && st_ok;
  }
  write_json(out, j);
  return ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relaxed commutant lifting and H2 interpolation toolkit", "rclkit"};
  app.require_subcommand(1);
  Options o;
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Problem file (JSON)")->required();
  };
  auto add_order = [&](CLI::App* sub, const char* help) {
    sub->add_option("--order", o.order, help)->check(CLI::NonNegativeNumber);
  };

  CLI::App* validate_cmd = app.add_subcommand("validate", "Check a problem file");
  add_file(validate_cmd);
  CLI::App* omega_cmd = app.add_subcommand("omega", "Emit the underlying contraction");
  add_file(omega_cmd);
  CLI::App* central_cmd = app.add_subcommand("central", "Taylor coefficients of the central solution");
  add_file(central_cmd);
  add_order(central_cmd, "Highest coefficient index");
  CLI::App* unique_cmd = app.add_subcommand("unique", "Decide uniqueness of the solution");
  add_file(unique_cmd);
  unique_cmd->add_flag("--witness", o.witness, "Construct a second solution when one exists");
  add_order(unique_cmd, "Coefficients compared by the witness");
  unique_cmd->add_option("--seed", o.seed, "Seed for the witness fallback search");
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solution for a Schur parameter");
  add_file(solve_cmd);
  solve_cmd->add_option("--param", o.param, "Parameter file (JSON)")->required();
  add_order(solve_cmd, "Highest coefficient index");
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a candidate solution");
  add_file(verify_cmd);
  verify_cmd->add_option("--solution", o.solution, "Solution file (JSON)")->required();
  verify_cmd->add_option("--blocks", o.blocks, "Taylor blocks of the lifting")
      ->check(CLI::PositiveNumber);
  CLI::App* audit_cmd = app.add_subcommand("audit", "Co-isometry audits");
  add_file(audit_cmd);
  audit_cmd->add_option("--order", o.order, "Number of blocks")->check(CLI::PositiveNumber);
  audit_cmd->add_option("--system", o.system, "System file with A, B, C, D (JSON)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "rclkit: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*validate_cmd) return cmd_validate(o, out);
    if (*omega_cmd) return cmd_omega(o, out);
    if (*central_cmd) return cmd_central(o, out);
    if (*unique_cmd) return cmd_unique(o, out);
    if (*solve_cmd) return cmd_solve(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*audit_cmd) return cmd_audit(o, out);
  } catch (const ParseError& e) {
    err << "rclkit: parse error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "rclkit: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace rclkit::cli
