// Copyright 2026 The trigsip Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "trigsip/validation.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "trigsip/error.hpp"
#include "trigsip/moment_reduction.hpp"
#include "trigsip/sdp.hpp"

namespace trigsip {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

CoefficientMode resolve_mode(const SipInstance& instance,
                             const MomentOptions& options) {
  if (options.coefficients) return *options.coefficients;
  return instance.has_analytic_coefficients() ? CoefficientMode::kAnalytic
                                              : CoefficientMode::kReflectThenDft;
}

int resolve_samples(const MomentOptions& options) {
  return options.N > 0 ? options.N : default_sample_count(options.K);
}

nlohmann::json vector_json(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

GridLpResult solve_grid(const Eigen::MatrixXd& rows_on_grid,
                        const Eigen::VectorXd& c, double tol) {
  const auto n = c.size();
  if (rows_on_grid.rows() != n + 1) {
    throw InvalidArgument("grid rows do not match the cost vector");
  }
  const Eigen::MatrixXd A = rows_on_grid.bottomRows(n).transpose();
  const Eigen::VectorXd b = rows_on_grid.row(0).transpose();
  const LpResult lp = solve_lp(c, A, b, {tol, LpOptions{}.max_iters});
  return {lp.status, lp.value, lp.x};
}

}  // namespace

SolveReport solve_moment(const SipInstance& instance,
                         const MomentOptions& options) {
  if (options.K < 0) throw InvalidArgument("K must be >= 0");
  const auto start = Clock::now();
  const CoefficientMode mode = resolve_mode(instance, options);
  const int N = resolve_samples(options);

  SolveReport report;
  report.method =
      options.complex_path ? Method::kMomentComplex : Method::kMomentReal;
  report.instance = instance.label();
  report.K = options.K;
  report.N = N;
  report.config = {{"K", options.K},
                   {"N", N},
                   {"coefficients", std::string(to_string(mode))},
                   {"tol", options.tol},
                   {"max_iters", options.max_iters},
                   {"diagnostic_density", options.diagnostic_density}};

  const FourierTable table = fourier_table(instance, options.K, N, mode);
  SdpSolution sol;
  const SdpOptions sdp_options{options.tol, options.max_iters, {}};
  if (options.complex_path) {
    sol = solve_sdp(to_sdp(build_complex_moment_program(table, instance.c())),
                    sdp_options);
  } else {
    sol = solve_sdp(to_sdp(build_real_moment_program(table, instance.c())),
                    sdp_options);
  }

  // Statuses refer to the truncated SIP, the dual of the moment program.
  report.status = sol.status;
  if (sol.status == SolveStatus::kInfeasible) {
    report.status = SolveStatus::kUnbounded;
  } else if (sol.status == SolveStatus::kUnbounded) {
    report.status = SolveStatus::kInfeasible;
  }
  report.iterations = sol.iterations;
  report.x = sol.x_multipliers;
  report.value = instance.c().dot(report.x);
  report.violation = constraint_violation(
      instance, report.x, EvaluationGrid::uniform(options.diagnostic_density));
  report.diagnostics = {
      {"sdp_status", std::string(to_string(sol.status))},
      {"sdp_value", sol.value},
      {"sdp_dual_value", sol.dual_value},
      {"gap", sol.gap},
      {"primal_equality_residual", sol.residuals.primal_equality},
      {"dual_residual", sol.residuals.dual},
      {"min_eig_lmi", sol.residuals.min_eig_lmi},
      {"min_eig_y", sol.residuals.min_eig_y},
      {"complementarity", sol.residuals.complementarity},
      {"removed_rows", sol.removed_rows},
      {"max_imag_before_zeroing", table.max_imag_before_zeroing},
      {"message", sol.message},
  };
  report.runtime_seconds = seconds_since(start);
  return report;
}

GridLpResult grid_lp_value(const SipInstance& instance,
                           const EvaluationGrid& grid, double tol) {
  const auto& points = grid.points();
  Eigen::MatrixXd rows(instance.n() + 1, static_cast<Eigen::Index>(points.size()));
  for (Eigen::Index i = 0; i < rows.cols(); ++i) {
    for (int j = 0; j <= instance.n(); ++j) {
      rows(j, i) = eval_constraint_row(instance, j, points[i]);
    }
  }
  return solve_grid(rows, instance.c(), tol);
}

GridLpResult grid_lp_value(const FourierTable& table,
                           const EvaluationGrid& grid, const Eigen::VectorXd& c,
                           double tol) {
  return solve_grid(eval_truncated_grid(table, grid), c, tol);
}

SolveReport solve_grid_lp(const SipInstance& instance,
                          const GridLpOptions& options) {
  const auto start = Clock::now();
  SolveReport report;
  report.method = Method::kGridLp;
  report.instance = instance.label();
  report.config = {{"grid_density", options.density},
                   {"tol", options.tol},
                   {"diagnostic_density", options.diagnostic_density}};
  const auto result =
      grid_lp_value(instance, EvaluationGrid::uniform(options.density), options.tol);
  report.status = result.status;
  report.x = result.x;
  report.value = result.value;
  report.violation = constraint_violation(
      instance, report.x, EvaluationGrid::uniform(options.diagnostic_density));
  report.runtime_seconds = seconds_since(start);
  return report;
}

ConvergenceSeries convergence_study(const SipInstance& instance,
                                    const std::vector<int>& Ks,
                                    double reference,
                                    const MomentOptions& base) {
  for (std::size_t i = 1; i < Ks.size(); ++i) {
    if (Ks[i] <= Ks[i - 1]) {
      throw InvalidArgument("convergence study needs strictly increasing K");
    }
  }
  ConvergenceSeries series;
  series.instance = instance.label();
  series.reference = reference;
  for (int K : Ks) {
    MomentOptions options = base;
    options.K = K;
    options.N = 0;
    ConvergencePoint point;
    point.K = K;
    try {
      const SolveReport report = solve_moment(instance, options);
      point.value = report.value;
      point.violation = report.violation;
      point.runtime_seconds = report.runtime_seconds;
      point.status = report.status;
    } catch (const NumericalError&) {
      point.status = SolveStatus::kNumericalFailure;
      point.value = std::numeric_limits<double>::quiet_NaN();
    }
    point.abs_error = std::abs(point.value - reference);
    point.rate_ratio = K >= 2 ? point.abs_error / (std::log(K) / K)
                              : std::numeric_limits<double>::quiet_NaN();
    series.points.push_back(point);
  }
  return series;
}

CrossCheck cross_check(const SipInstance& instance, int K,
                       const CrossCheckOptions& options) {
  if (K < 1) throw InvalidArgument("cross check needs K >= 1");
  CrossCheck check;
  check.K = K;
  check.grid_density = options.grid_density;

  MomentOptions moment = options.moment;
  moment.K = K;
  check.moment = solve_moment(instance, moment);

  const FourierTable table = fourier_table(instance, K, resolve_samples(moment),
                                           resolve_mode(instance, moment));
  const auto grid = EvaluationGrid::uniform(options.grid_density);
  check.truncated_grid = grid_lp_value(table, grid, instance.c(), options.lp_tol);
  check.original_grid = solve_grid_lp(
      instance, {options.grid_density, options.lp_tol, moment.diagnostic_density});
  return check;
}

namespace {

std::ostringstream csv_stream() {
  std::ostringstream out;
  out.precision(17);
  out << "K,value,abs_error,violation,runtime_seconds";
  return out;
}

}  // namespace

std::string to_csv(const ConvergenceSeries& series) {
  auto out = csv_stream();
  out << '\n';
  for (const auto& p : series.points) {
    out << p.K << ',' << p.value << ',' << p.abs_error << ',' << p.violation
        << ',' << p.runtime_seconds << '\n';
  }
  return out.str();
}

std::string to_csv(const CrossCheck& check) {
  auto out = csv_stream();
  out << ",quantity\n";
  const double ref = check.moment.value;
  out << check.K << ',' << check.moment.value << ',' << 0.0 << ','
      << check.moment.violation << ',' << check.moment.runtime_seconds
      << ",moment\n";
  out << check.K << ',' << check.truncated_grid.value << ','
      << std::abs(check.truncated_grid.value - ref) << ",," << ",truncated_grid_lp\n";
  out << check.K << ',' << check.original_grid.value << ','
      << std::abs(check.original_grid.value - ref) << ','
      << check.original_grid.violation << ','
      << check.original_grid.runtime_seconds << ",original_grid_lp\n";
  return out.str();
}

nlohmann::json to_json(const ConvergenceSeries& series) {
  nlohmann::json doc;
  doc["instance"] = series.instance;
  doc["reference"] = series.reference;
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : series.points) {
    points.push_back({{"K", p.K},
                      {"value", p.value},
                      {"abs_error", p.abs_error},
                      {"violation", p.violation},
                      {"runtime_seconds", p.runtime_seconds},
                      {"status", std::string(to_string(p.status))},
                      {"rate_ratio", p.rate_ratio}});
  }
  doc["points"] = points;
  return doc;
}

nlohmann::json to_json(const CrossCheck& check) {
  nlohmann::json doc;
  doc["K"] = check.K;
  doc["grid_density"] = check.grid_density;
  doc["moment"] = to_json(check.moment);
  doc["truncated_grid_lp"] = {
      {"value", check.truncated_grid.value},
      {"x", vector_json(check.truncated_grid.x)},
      {"status", std::string(to_string(check.truncated_grid.status))}};
  doc["original_grid_lp"] = to_json(check.original_grid);
  return doc;
}

}  // namespace trigsip
