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

#include <cstdint>
#include <optional>

#include <Eigen/Core>

#include "trigsip/problem_model.hpp"
#include "trigsip/report.hpp"

namespace trigsip {

struct CuttingPlaneParams {
  EvaluationGrid initial_grid = EvaluationGrid::uniform(10);
  double violation_tol = 1e-8;
  int max_rounds = 200;
  int refine_grid_density = 10000;
  double lp_tol = 1e-10;
  int diagnostic_density = 100000;
  // When set, interior start points are jittered by up to a quarter of
  // their spacing with this seed.
  std::optional<std::uint64_t> jitter_seed;
};

struct ViolatedPoint {
  double t = 0.0;
  double violation = 0.0;  // may be <= 0 (feasible)
};

// Coarse argmax of sum_j a_j(t) x_j - a_0(t) on a uniform grid, refined by
// golden-section search on the bracketing cells to width 1e-10. Ties go to
// the smallest t.
ViolatedPoint most_violated_point(const SipInstance& instance,
                                  const Eigen::VectorXd& x,
                                  int refine_grid_density);

// Exchange method: solve the LP on a finite index set, add the most violated
// index, repeat until the violation drops below violation_tol.
SolveReport solve_cutting_plane(const SipInstance& instance,
                                const CuttingPlaneParams& params = {});

}  // namespace trigsip
