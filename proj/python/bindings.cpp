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

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trigsip/cli.hpp"
#include "trigsip/cutting_plane.hpp"
#include "trigsip/problem_model.hpp"
#include "trigsip/spectral.hpp"
#include "trigsip/validation.hpp"

namespace py = pybind11;

namespace {

using namespace trigsip;

SipInstance resolve(const py::object& source, int n) {
  if (py::isinstance<py::int_>(source)) {
    return builtin_example(source.cast<int>(), n);
  }
  return instance_from_json(source.cast<std::string>());
}

std::string solve(const py::object& source, int n, const std::string& method,
                  int K, int N, const std::optional<std::string>& coefficients,
                  double tol, int grid_density) {
  const SipInstance inst = resolve(source, n);
  SolveReport report;
  switch (parse_method(method)) {
    case Method::kMomentReal:
    case Method::kMomentComplex: {
      MomentOptions o;
      o.K = K;
      o.N = N;
      o.complex_path = parse_method(method) == Method::kMomentComplex;
      if (coefficients) o.coefficients = parse_coefficient_mode(*coefficients);
      o.tol = tol;
      report = solve_moment(inst, o);
      break;
    }
    case Method::kCuttingPlane:
      report = solve_cutting_plane(inst);
      break;
    case Method::kGridLp: {
      GridLpOptions o;
      o.density = grid_density;
      report = solve_grid_lp(inst, o);
      break;
    }
  }
  return to_json(report).dump();
}

py::tuple table(const py::object& source, int n, int K, int N,
                const std::string& mode) {
  const SipInstance inst = resolve(source, n);
  const FourierTable t =
      fourier_table(inst, K, N > 0 ? N : default_sample_count(K),
                    parse_coefficient_mode(mode));
  return py::make_tuple(t.r, t.s);
}

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Moment relaxations for trigonometric semi-infinite programs";

  m.def("catalog", [] {
    py::list out;
    for (const auto& e : builtin_catalog()) {
      py::dict d;
      d["id"] = e.id;
      d["n_min"] = e.n_min;
      d["n_max"] = e.n_max;
      d["description"] = e.description;
      out.append(d);
    }
    return out;
  });
  m.def("reference_value", &reference_value, py::arg("id"), py::arg("n"));
  m.def("solve", &solve, py::arg("instance"), py::arg("n") = 5,
        py::arg("method") = "moment_real", py::arg("K") = 8, py::arg("N") = 0,
        py::arg("coefficients") = py::none(), py::arg("tol") = 1e-8,
        py::arg("grid_density") = kDefaultGridDensity);
  m.def("fourier_table", &table, py::arg("instance"), py::arg("n") = 5,
        py::arg("K") = 8, py::arg("N") = 0,
        py::arg("coefficients") = "reflect_then_dft");
  m.def("dft_coefficients",
        [](const std::vector<double>& samples, int K) {
          return dft_coefficients(samples, K);
        },
        py::arg("samples"), py::arg("K"));
  m.def("constraint_violation",
        [](const py::object& source, int n, const Eigen::VectorXd& x,
           int density) {
          return constraint_violation(resolve(source, n), x,
                                      EvaluationGrid::uniform(density));
        },
        py::arg("instance"), py::arg("n"), py::arg("x"),
        py::arg("density") = kDiagnosticDensity);
  m.def("run", &run, py::arg("args"));
}
