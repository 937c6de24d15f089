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

#include <complex>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace trigsip {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// A scalar function on [0, 2pi].
using RowFunction = std::function<double(double)>;

// Closed-form Fourier coefficient a_{j,k} (k >= 0) of the evenly reflected
// row j, under the kernel (1/2pi) * integral f(t) e^{ikt} dt.
using AnalyticCoefficients = std::function<std::complex<double>(int j, int k)>;

// Linear semi-infinite program over the index set [0, 2pi]:
//
//   min  c^T x
//   s.t. sum_{j=1..n} a_j(t) x_j <= a_0(t)   for all t in [0, 2pi].
//
// Rows are stored as evaluators; row 0 is the right-hand side.
class SipInstance {
 public:
  SipInstance(std::string label, Eigen::VectorXd c,
              std::vector<RowFunction> rows,
              AnalyticCoefficients reflected_coefficients = {});

  int n() const { return static_cast<int>(c_.size()); }
  const Eigen::VectorXd& c() const { return c_; }
  const std::string& label() const { return label_; }

  // Raw evaluation, no domain checks. Use eval_constraint_row() for the
  // checked version.
  double row(int j, double t) const { return rows_[j](t); }
  const RowFunction& row_function(int j) const { return rows_[j]; }

  bool has_analytic_coefficients() const {
    return static_cast<bool>(reflected_coefficients_);
  }
  std::complex<double> analytic_coefficient(int j, int k) const;

 private:
  std::string label_;
  Eigen::VectorXd c_;
  std::vector<RowFunction> rows_;
  AnalyticCoefficients reflected_coefficients_;
};

// Strictly increasing sample points inside [0, 2pi].
class EvaluationGrid {
 public:
  explicit EvaluationGrid(std::vector<double> points);

  // `density` equispaced points including both endpoints.
  static EvaluationGrid uniform(int density);

  const std::vector<double>& points() const { return points_; }
  int density() const { return static_cast<int>(points_.size()); }

 private:
  std::vector<double> points_;
};

inline constexpr int kDefaultGridDensity = 10000;

struct ExampleInfo {
  int id;
  int n_min;
  int n_max;
  std::string description;
};

// The five registered test problems, already scaled to [0, 2pi].
std::vector<ExampleInfo> builtin_catalog();

// Throws InvalidArgument on an unknown id or an unsupported n. For ids 3..5
// the dimension is fixed (8, 9, 10) and `n` is ignored.
SipInstance builtin_example(int id, int n = 5);

// Published optimal value of a registered example, if known.
std::optional<double> reference_value(int id, int n);

double eval_constraint_row(const SipInstance& instance, int j, double t);

// max(0, max_t sum_j a_j(t) x_j - a_0(t)) over the grid.
double constraint_violation(const SipInstance& instance,
                            const Eigen::VectorXd& x,
                            const EvaluationGrid& grid);

// Same quantity without the clamp at zero, plus the location of the maximum
// (first one on ties).
struct GridMaximum {
  double t = 0.0;
  double value = 0.0;
};
GridMaximum max_constraint_slack(const SipInstance& instance,
                                 const Eigen::VectorXd& x,
                                 const EvaluationGrid& grid);

// Custom instances:
//   {"n": int, "c": [..], "label": "...",
//    "rows": [{"kind": "samples", "t": [..], "v": [..]}, ...]}
// with n + 1 rows (row 0 first). Sampled rows are linearly interpolated and
// their knots must cover [0, 2pi].
SipInstance instance_from_json(std::string_view text);
SipInstance load_instance_file(const std::filesystem::path& path);

// Piecewise-linear interpolant through (t[i], v[i]).
RowFunction linear_interpolant(std::vector<double> t, std::vector<double> v);

}  // namespace trigsip
