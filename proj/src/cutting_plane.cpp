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

#include "trigsip/cutting_plane.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <vector>

#include "trigsip/error.hpp"
#include "trigsip/sdp.hpp"

namespace trigsip {
namespace {

double slack(const SipInstance& instance, const Eigen::VectorXd& x, double t) {
  double g = -instance.row(0, t);
  for (int j = 1; j <= instance.n(); ++j) g += instance.row(j, t) * x[j - 1];
  return g;
}

// Maximizes g on [lo, hi] to the requested bracket width.
ViolatedPoint golden_section(const SipInstance& instance,
                             const Eigen::VectorXd& x, double lo, double hi,
                             double width) {
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double gc = slack(instance, x, c);
  double gd = slack(instance, x, d);
  while (b - a > width) {
    if (gc >= gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - inv_phi * (b - a);
      gc = slack(instance, x, c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + inv_phi * (b - a);
      gd = slack(instance, x, d);
    }
  }
  const double t = 0.5 * (a + b);
  return {t, slack(instance, x, t)};
}

std::vector<double> start_points(const CuttingPlaneParams& params) {
  std::vector<double> points = params.initial_grid.points();
  if (params.jitter_seed && points.size() > 2) {
    std::mt19937_64 rng(*params.jitter_seed);
    for (std::size_t i = 1; i + 1 < points.size(); ++i) {
      const double spacing =
          std::min(points[i] - points[i - 1], points[i + 1] - points[i]);
      std::uniform_real_distribution<double> jitter(-0.25 * spacing,
                                                    0.25 * spacing);
      points[i] += jitter(rng);
    }
  }
  return points;
}

}  // namespace

ViolatedPoint most_violated_point(const SipInstance& instance,
                                  const Eigen::VectorXd& x,
                                  int refine_grid_density) {
  if (x.size() != instance.n()) {
    throw InvalidArgument("x has length " + std::to_string(x.size()) +
                          ", instance has n = " + std::to_string(instance.n()));
  }
  const auto grid = EvaluationGrid::uniform(std::max(2, refine_grid_density));
  const auto& points = grid.points();
  std::size_t best = 0;
  double best_value = slack(instance, x, points[0]);
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double g = slack(instance, x, points[i]);
    if (g > best_value) {
      best_value = g;
      best = i;
    }
  }
  ViolatedPoint result{points[best], best_value};
  const double lo = points[best == 0 ? 0 : best - 1];
  const double hi = points[std::min(best + 1, points.size() - 1)];
  const auto refined = golden_section(instance, x, lo, hi, 1e-10);
  if (refined.violation > result.violation) result = refined;
  return result;
}

SolveReport solve_cutting_plane(const SipInstance& instance,
                                const CuttingPlaneParams& params) {
  if (!(params.violation_tol > 0.0)) {
    throw InvalidArgument("violation_tol must be positive");
  }
  if (params.max_rounds < 1) throw InvalidArgument("max_rounds must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  const int n = instance.n();

  SolveReport report;
  report.method = Method::kCuttingPlane;
  report.instance = instance.label();
  report.config = {
      {"initial_points", params.initial_grid.density()},
      {"violation_tol", params.violation_tol},
      {"max_rounds", params.max_rounds},
      {"refine_grid_density", params.refine_grid_density},
      {"lp_tol", params.lp_tol},
      {"diagnostic_density", params.diagnostic_density},
      {"jitter_seed", params.jitter_seed ? nlohmann::json(*params.jitter_seed)
                                         : nlohmann::json(nullptr)},
  };

  std::vector<double> index_set = start_points(params);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  ViolatedPoint worst;
  report.status = SolveStatus::kIterationLimit;
  for (int round = 1; round <= params.max_rounds; ++round) {
    const auto m = static_cast<Eigen::Index>(index_set.size());
    Eigen::MatrixXd A(m, n);
    Eigen::VectorXd b(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      const double t = index_set[i];
      for (int j = 1; j <= n; ++j) A(i, j - 1) = instance.row(j, t);
      b[i] = instance.row(0, t);
    }
    const LpResult lp = solve_lp(instance.c(), A, b, {params.lp_tol, LpOptions{}.max_iters});
    report.iterations = round;
    if (lp.status != SolveStatus::kOptimal) {
      report.status = lp.status;
      break;
    }
    x = lp.x;
    report.round_values.push_back(lp.value);
    worst = most_violated_point(instance, x, params.refine_grid_density);
    if (worst.violation <= params.violation_tol) {
      report.status = SolveStatus::kOptimal;
      break;
    }
    index_set.push_back(worst.t);
  }

  report.x = x;
  report.value = instance.c().dot(x);
  report.violation = constraint_violation(
      instance, x, EvaluationGrid::uniform(params.diagnostic_density));
  report.diagnostics = {{"rounds", report.iterations},
                        {"final_separation_t", worst.t},
                        {"final_separation_violation", worst.violation},
                        {"index_set_size", index_set.size()}};
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace trigsip
