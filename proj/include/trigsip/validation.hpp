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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "trigsip/problem_model.hpp"
#include "trigsip/report.hpp"
#include "trigsip/spectral.hpp"

namespace trigsip {

inline constexpr int kDiagnosticDensity = 100000;

struct MomentOptions {
  int K = 8;
  int N = 0;  // 0 selects default_sample_count(K)
  bool complex_path = false;
  // Defaults to analytic when the instance registers closed forms,
  // reflect_then_dft otherwise.
  std::optional<CoefficientMode> coefficients;
  double tol = 1e-8;
  int max_iters = 200;
  int diagnostic_density = kDiagnosticDensity;
};

// Fourier coefficients, moment SDP, multipliers as the SIP solution.
SolveReport solve_moment(const SipInstance& instance,
                         const MomentOptions& options);

struct GridLpResult {
  SolveStatus status = SolveStatus::kNumericalFailure;
  double value = 0.0;
  Eigen::VectorXd x;
};

// min c^T x s.t. sum_j a_j(t) x_j <= a_0(t) on every grid point.
GridLpResult grid_lp_value(const SipInstance& instance,
                           const EvaluationGrid& grid, double tol = 1e-9);
// Same with the rows replaced by their truncated Fourier series.
GridLpResult grid_lp_value(const FourierTable& table,
                           const EvaluationGrid& grid, const Eigen::VectorXd& c,
                           double tol = 1e-9);

struct GridLpOptions {
  int density = kDefaultGridDensity;
  double tol = 1e-9;
  int diagnostic_density = kDiagnosticDensity;
};
SolveReport solve_grid_lp(const SipInstance& instance,
                          const GridLpOptions& options = {});

struct ConvergencePoint {
  int K = 0;
  double value = 0.0;
  double abs_error = 0.0;
  double violation = 0.0;
  double runtime_seconds = 0.0;
  SolveStatus status = SolveStatus::kNumericalFailure;
  // abs_error / (ln K / K); NaN when K < 2.
  double rate_ratio = 0.0;
};

struct ConvergenceSeries {
  std::string instance;
  double reference = 0.0;
  std::vector<ConvergencePoint> points;
};

// Runs solve_moment for each K (strictly increasing). Failed solves keep
// their status and the study continues.
ConvergenceSeries convergence_study(const SipInstance& instance,
                                    const std::vector<int>& Ks,
                                    double reference,
                                    const MomentOptions& base = {});

struct CrossCheck {
  int K = 0;
  SolveReport moment;
  GridLpResult truncated_grid;  // grid LP of the truncated table
  SolveReport original_grid;    // grid LP of the instance itself
  int grid_density = 0;
};

struct CrossCheckOptions {
  MomentOptions moment;
  int grid_density = kDiagnosticDensity;
  double lp_tol = 1e-10;
};

CrossCheck cross_check(const SipInstance& instance, int K,
                       const CrossCheckOptions& options = {});

// CSV header: K,value,abs_error,violation,runtime_seconds
std::string to_csv(const ConvergenceSeries& series);
// Same columns plus a trailing `quantity` column naming each row.
std::string to_csv(const CrossCheck& check);
nlohmann::json to_json(const ConvergenceSeries& series);
nlohmann::json to_json(const CrossCheck& check);

}  // namespace trigsip
