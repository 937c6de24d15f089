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

#include "trigsip/report.hpp"

#include "trigsip/error.hpp"

namespace trigsip {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kMomentReal:
      return "moment_real";
    case Method::kMomentComplex:
      return "moment_complex";
    case Method::kCuttingPlane:
      return "cutting_plane";
    case Method::kGridLp:
      return "grid_lp";
  }
  return "unknown";
}

Method parse_method(std::string_view text) {
  if (text == "moment_real") return Method::kMomentReal;
  if (text == "moment_complex") return Method::kMomentComplex;
  if (text == "cutting_plane") return Method::kCuttingPlane;
  if (text == "grid_lp") return Method::kGridLp;
  throw InvalidArgument("unknown method '" + std::string(text) + "'");
}

nlohmann::json to_json(const SolveReport& report) {
  nlohmann::json doc;
  doc["method"] = std::string(to_string(report.method));
  doc["instance"] = report.instance;
  doc["K"] = report.K ? nlohmann::json(*report.K) : nlohmann::json(nullptr);
  doc["N"] = report.N ? nlohmann::json(*report.N) : nlohmann::json(nullptr);
  doc["value"] = report.value;
  doc["x"] = std::vector<double>(report.x.data(), report.x.data() + report.x.size());
  doc["violation"] = report.violation;
  doc["runtime_seconds"] = report.runtime_seconds;
  doc["status"] = std::string(to_string(report.status));
  doc["iterations"] = report.iterations;
  if (!report.round_values.empty()) doc["round_values"] = report.round_values;
  doc["config"] = report.config;
  doc["diagnostics"] = report.diagnostics;
  return doc;
}

}  // namespace trigsip
