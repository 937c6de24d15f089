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
#include <limits>
#include <random>

#include <doctest.h>

#include "fixtures.hpp"
#include "trigsip/error.hpp"
#include "trigsip/problem_model.hpp"
#include "trigsip/validation.hpp"

using namespace trigsip;
using trigsip::testing::toy_instance;
using trigsip::testing::unit;

TEST_SUITE("problem_model") {

TEST_CASE("example 1 rows follow the printed formulas") {
  const SipInstance inst = builtin_example(1, 5);
  REQUIRE(inst.n() == 5);
  for (int j = 1; j <= 5; ++j) CHECK(inst.c()(j - 1) == doctest::Approx(1.0 / j));
  for (double t : {0.0, 0.7, 3.1, 5.5, kTwoPi}) {
    const double tau = t / kTwoPi;
    CHECK(inst.row(0, t) == doctest::Approx(-std::tan(tau)));
    for (int j = 1; j <= 5; ++j) {
      CHECK(inst.row(j, t) == doctest::Approx(-std::pow(tau, j - 1)));
    }
  }
}

TEST_CASE("example 5 rows and costs") {
  const SipInstance inst = builtin_example(5, 3);
  REQUIRE(inst.n() == 10);
  for (int j = 1; j <= 10; ++j) {
    CHECK(inst.c()(j - 1) == doctest::Approx(-std::pow(0.95, 2 * j - 1)));
    CHECK(inst.row(j, 1.1) ==
          doctest::Approx(-2.0 * std::cos((2 * j - 1) * 1.1 / 2.0)));
  }
  CHECK(inst.row(0, 2.0) == 1.0);
  CHECK(builtin_example(3).n() == 8);
  CHECK(builtin_example(4).n() == 9);
}

TEST_CASE("examples 2 to 4 right-hand sides") {
  const double t = 1.9;
  CHECK(builtin_example(2, 6).row(0, t) ==
        doctest::Approx(-kTwoPi / std::sqrt(4 * kPi * kPi + t * t)));
  CHECK(builtin_example(2, 6).row(3, t) ==
        doctest::Approx(-std::pow(t / kTwoPi + 1.0, 2)));
  CHECK(builtin_example(3).row(0, t) == doctest::Approx(-kTwoPi / (4 * kPi - t)));
  CHECK(builtin_example(4).row(0, t) ==
        doctest::Approx(-4 * kPi * kPi / (4 * kPi * kPi + t * t)));
}

TEST_CASE("registry rejects unknown ids and unsupported n") {
  CHECK_THROWS_AS(builtin_example(9, 5), InvalidArgument);
  CHECK_THROWS_AS(builtin_example(0, 5), InvalidArgument);
  CHECK_THROWS_AS(builtin_example(1, 9), InvalidArgument);
  CHECK_THROWS_AS(builtin_example(2, 4), InvalidArgument);
  CHECK(builtin_catalog().size() == 5);
}

TEST_CASE("reference values") {
  CHECK(*reference_value(1, 5) == 0.61740424);
  CHECK(*reference_value(1, 8) == 0.61565322);
  CHECK(*reference_value(2, 7) == 1.0);
  CHECK(*reference_value(3, 8) == 0.69314815);
  CHECK(*reference_value(4, 9) == 0.78549953);
  CHECK(*reference_value(5, 10) == -0.48354840);
}

TEST_CASE("eval_constraint_row examples") {
  CHECK(eval_constraint_row(builtin_example(5), 1, 0.0) == doctest::Approx(-2.0));
  CHECK(eval_constraint_row(builtin_example(3), 0, 0.0) == doctest::Approx(-0.5));
  CHECK(eval_constraint_row(builtin_example(1, 5), 1, 0.0) == -1.0);
}

TEST_CASE("eval_constraint_row rejects bad input") {
  const SipInstance inst = builtin_example(1, 5);
  CHECK_THROWS_AS(eval_constraint_row(inst, 0, -0.1), InvalidArgument);
  CHECK_THROWS_AS(eval_constraint_row(inst, 0, kTwoPi + 1e-6), InvalidArgument);
  CHECK_THROWS_AS(eval_constraint_row(inst, 6, 1.0), InvalidArgument);
  Eigen::VectorXd c(1);
  c << 1.0;
  const SipInstance bad("bad", c,
                        {[](double t) { return t > 1.0 ? std::nan("") : 0.0; },
                         [](double) { return 1.0; }});
  CHECK_NOTHROW(eval_constraint_row(bad, 0, 0.5));
  CHECK_THROWS_AS(eval_constraint_row(bad, 0, 2.0), NumericalError);
}

TEST_CASE("instance construction is validated") {
  Eigen::VectorXd c(2);
  c << 1.0, 2.0;
  CHECK_THROWS_AS(SipInstance("x", c, {[](double) { return 0.0; }}),
                  InvalidArgument);
  CHECK_THROWS_AS(SipInstance("x", Eigen::VectorXd(0), {[](double) { return 0.0; }}),
                  InvalidArgument);
}

TEST_CASE("constraint_violation examples") {
  const SipInstance inst = builtin_example(2, 5);
  const EvaluationGrid grid = EvaluationGrid::uniform(kDiagnosticDensity);
  CHECK(constraint_violation(inst, unit(5, 0), grid) == doctest::Approx(0.0));
  const GridMaximum at = max_constraint_slack(inst, unit(5, 0), grid);
  CHECK(at.t == 0.0);
  CHECK(at.value == doctest::Approx(0.0));
  CHECK(constraint_violation(inst, Eigen::VectorXd::Zero(5), grid) ==
        doctest::Approx(1.0));
  CHECK_THROWS_AS(constraint_violation(inst, Eigen::VectorXd::Zero(4), grid),
                  InvalidArgument);
}

TEST_CASE("example 1 moment solution is nearly feasible at K = 32") {
  MomentOptions options;
  options.K = 32;
  const SolveReport report = solve_moment(builtin_example(1, 5), options);
  REQUIRE(report.status == SolveStatus::kOptimal);
  CHECK(report.violation <= 1e-2);
}

TEST_CASE("evaluation grid invariants") {
  CHECK_THROWS_AS(EvaluationGrid({0.0}), InvalidArgument);
  CHECK_THROWS_AS(EvaluationGrid({0.0, 0.0}), InvalidArgument);
  CHECK_THROWS_AS(EvaluationGrid({-0.1, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(EvaluationGrid({1.0, 7.0}), InvalidArgument);
  const EvaluationGrid g = EvaluationGrid::uniform(5);
  REQUIRE(g.density() == 5);
  CHECK(g.points().front() == 0.0);
  CHECK(g.points().back() == kTwoPi);
}

TEST_CASE("property: builtin rows are finite on a dense grid") {
  const EvaluationGrid grid = EvaluationGrid::uniform(kDefaultGridDensity);
  for (const auto& info : builtin_catalog()) {
    for (int n = info.n_min; n <= info.n_max; ++n) {
      const SipInstance inst = builtin_example(info.id, n);
      for (double t : grid.points()) {
        for (int j = 0; j <= inst.n(); ++j) {
          REQUIRE(std::isfinite(eval_constraint_row(inst, j, t)));
        }
      }
    }
  }
}

TEST_CASE("property: violation is monotone under grid coarsening") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  const EvaluationGrid fine = EvaluationGrid::uniform(4001);
  std::vector<double> coarse_points;
  for (int i = 0; i < fine.density(); i += 8) coarse_points.push_back(fine.points()[i]);
  const EvaluationGrid coarse(coarse_points);
  for (int id : {1, 2, 3, 4, 5}) {
    const SipInstance inst = builtin_example(id, 5);
    for (int trial = 0; trial < 20; ++trial) {
      Eigen::VectorXd x(inst.n());
      for (int j = 0; j < inst.n(); ++j) x(j) = normal(rng);
      CHECK(constraint_violation(inst, x, coarse) <=
            constraint_violation(inst, x, fine));
    }
  }
}

TEST_CASE("property: grid LP solutions are grid feasible") {
  const EvaluationGrid grid = EvaluationGrid::uniform(500);
  for (int id : {1, 2, 3, 4, 5}) {
    const SipInstance inst = builtin_example(id, 5);
    const GridLpResult lp = grid_lp_value(inst, grid, 1e-10);
    REQUIRE(lp.status == SolveStatus::kOptimal);
    CHECK(constraint_violation(inst, lp.x, grid) <= 1e-8);
  }
}

TEST_CASE("JSON instances use linear interpolation") {
  const SipInstance inst = instance_from_json(R"({
    "label": "ramp", "n": 1, "c": [1.0],
    "rows": [
      {"kind": "samples", "t": [0, 6.283185307179586], "v": [-1, -3]},
      {"kind": "samples", "t": [0, 3.141592653589793, 6.283185307179586],
       "v": [-1, -1, -1]}
    ]})");
  CHECK(inst.label() == "ramp");
  CHECK(inst.row(0, kPi) == doctest::Approx(-2.0));
  CHECK(inst.row(1, 4.0) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(instance_from_json(R"({"n": 1, "c": [1], "rows": []})"),
                  InvalidArgument);
  CHECK_THROWS_AS(instance_from_json("not json"), InvalidArgument);
  CHECK_THROWS_AS(linear_interpolant({0.5, 6.0}, {1.0, 1.0}), InvalidArgument);
}

TEST_CASE("toy instance") {
  const SipInstance inst = toy_instance();
  CHECK(constraint_violation(inst, unit(1, 0), EvaluationGrid::uniform(10)) == 0.0);
}

}  // TEST_SUITE
