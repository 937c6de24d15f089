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

// Two-phase revised simplex for  min cost^T v  s.t.  G v = h,  v >= 0,
// sized for few rows and many columns.

#include <Eigen/Core>

#include "trigsip/sdp.hpp"

namespace trigsip::detail {

struct SimplexResult {
  SolveStatus status = SolveStatus::kNumericalFailure;
  Eigen::VectorXd v;   // primal solution, length = columns of G
  Eigen::VectorXd pi;  // row multipliers: G^T pi <= cost at optimality
  int iterations = 0;
};

SimplexResult simplex_standard_form(const Eigen::MatrixXd& G,
                                    const Eigen::VectorXd& h,
                                    const Eigen::VectorXd& cost, double tol,
                                    int max_pivots);

}  // namespace trigsip::detail
