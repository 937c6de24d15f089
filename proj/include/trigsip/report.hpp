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
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <json.hpp>

#include "trigsip/sdp.hpp"

namespace trigsip {

enum class Method { kMomentReal, kMomentComplex, kCuttingPlane, kGridLp };

std::string_view to_string(Method method);
Method parse_method(std::string_view text);

// Outcome of one solve of a semi-infinite program, by any method.
struct SolveReport {
  Method method = Method::kMomentReal;
  std::string instance;
  std::optional<int> K;
  std::optional<int> N;
  double value = 0.0;
  Eigen::VectorXd x;
  // max(0, max_t sum_j a_j(t) x_j - a_0(t)) on the diagnostic grid.
  double violation = 0.0;
  double runtime_seconds = 0.0;
  SolveStatus status = SolveStatus::kNumericalFailure;
  int iterations = 0;
  // Restricted-LP values per round (cutting plane only).
  std::vector<double> round_values;
  // Fully resolved configuration and solver certificates.
  nlohmann::json config = nlohmann::json::object();
  nlohmann::json diagnostics = nlohmann::json::object();
};

nlohmann::json to_json(const SolveReport& report);

}  // namespace trigsip
