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

#include <cmath>

#include <doctest.h>

#include "fixtures.hpp"
#include "trigsip/cutting_plane.hpp"
#include "trigsip/validation.hpp"

using namespace trigsip;

TEST_SUITE("cutting_plane") {

TEST_CASE("most violated point on example 2") {
  const SipInstance inst = builtin_example(2, 5);
  const ViolatedPoint at_e1 = most_violated_point(inst, testing::unit(5, 0), 10000);
  CHECK(at_e1.t == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
  CHECK(std::abs(at_e1.violation) <= 1e-12);
  const ViolatedPoint at_zero = most_violated_point(inst, Eigen::VectorXd::Zero(5), 10000);
  CHECK(at_zero.t == 0.0);
  CHECK(at_zero.violation == doctest::Approx(1.0));
}

TEST_CASE("grid LP optimum of example 1 is nearly feasible") {
  const SipInstance inst = builtin_example(1, 5);
  const GridLpResult lp = grid_lp_value(inst, EvaluationGrid::uniform(10000), 1e-10);
  REQUIRE(lp.status == SolveStatus::kOptimal);
  CHECK(most_violated_point(inst, lp.x, 10000).violation <= 1e-6);
}

TEST_CASE("refinement improves on the coarse scan") {
  Eigen::VectorXd c(1);
  c << 1.0;
  // Peak at an irrational point between coarse nodes.
  const double peak = 1.0 + 1.0 / std::sqrt(7.0);
  const SipInstance inst("peak", c, {[](double) { return 0.0; },
                                     [peak](double t) { return -(t - peak) * (t - peak); }});
  const ViolatedPoint v = most_violated_point(inst, testing::unit(1, 0), 50);
  CHECK(v.t == doctest::Approx(peak).epsilon(1e-8));
  CHECK(std::abs(v.violation) <= 1e-14);
}

TEST_CASE("toy instance closes in one round") {
  CuttingPlaneParams params;
  params.initial_grid = EvaluationGrid({0.0, 1e-3});
  const SolveReport r = solve_cutting_plane(testing::toy_instance(), params);
  REQUIRE(r.status == SolveStatus::kOptimal);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(r.round_values.size() == 1);
}

TEST_CASE("example 1 n = 5 with the default start points") {
  const SolveReport r = solve_cutting_plane(builtin_example(1, 5));
  REQUIRE(r.status == SolveStatus::kOptimal);
  CHECK(std::abs(r.value - 0.61740424) <= 1e-3);
}

TEST_CASE("example 2 n = 6 with the default start points") {
  const SolveReport r = solve_cutting_plane(builtin_example(2, 6));
  REQUIRE(r.status == SolveStatus::kOptimal);
  CHECK(std::abs(r.value - 1.0) <= 1e-4);
}

TEST_CASE("property: restricted values rise monotonically and stay below v(P)") {
  for (int id : {1, 2}) {
    for (int n : {5, 8}) {
      const SolveReport r = solve_cutting_plane(builtin_example(id, n));
      REQUIRE(r.status == SolveStatus::kOptimal);
      const double ref = *reference_value(id, n);
      for (std::size_t i = 0; i < r.round_values.size(); ++i) {
        CHECK(r.round_values[i] <= ref + 1e-6);
        if (i > 0) CHECK(r.round_values[i] >= r.round_values[i - 1] - 1e-9);
      }
    }
  }
}

TEST_CASE("property: termination certificate") {
  for (int id : {1, 2, 3, 4}) {
    const SipInstance inst = builtin_example(id, 5);
    CuttingPlaneParams params;
    const SolveReport r = solve_cutting_plane(inst, params);
    REQUIRE(r.status == SolveStatus::kOptimal);
    CHECK(constraint_violation(inst, r.x, EvaluationGrid::uniform(kDiagnosticDensity)) <=
          params.violation_tol + 1e-8);
  }
}

TEST_CASE("an unbounded restricted LP is propagated") {
  // Ten equispaced cuts leave example 5's restricted LP unbounded.
  const SolveReport r = solve_cutting_plane(builtin_example(5));
  CHECK(r.status == SolveStatus::kUnbounded);
  CuttingPlaneParams params;
  params.initial_grid = EvaluationGrid::uniform(200);
  const SolveReport dense = solve_cutting_plane(builtin_example(5), params);
  REQUIRE(dense.status == SolveStatus::kOptimal);
  CHECK(std::abs(dense.value + 0.48354840) <= 1e-6);
}

TEST_CASE("round limit yields iteration_limit") {
  CuttingPlaneParams params;
  params.max_rounds = 1;
  const SolveReport r = solve_cutting_plane(builtin_example(1, 5), params);
  CHECK(r.status == SolveStatus::kIterationLimit);
}

TEST_CASE("jittered start points are reproducible") {
  CuttingPlaneParams params;
  params.jitter_seed = 42;
  const SolveReport a = solve_cutting_plane(builtin_example(1, 6), params);
  const SolveReport b = solve_cutting_plane(builtin_example(1, 6), params);
  REQUIRE(a.status == SolveStatus::kOptimal);
  CHECK(a.value == b.value);
  CHECK(a.round_values == b.round_values);
  CHECK(a.config.at("jitter_seed") == 42);
}

}  // TEST_SUITE
