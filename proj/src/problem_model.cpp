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

#include "trigsip/problem_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "trigsip/error.hpp"

namespace trigsip {
namespace {

// (base)^(power) by repeated multiplication; 0^0 = 1.
double int_power(double base, int power) {
  double result = 1.0;
  for (int i = 0; i < power; ++i) result *= base;
  return result;
}

// Rows a_j(t) = -(t / 2pi + shift)^(j-1), j = 1..n.
std::vector<RowFunction> polynomial_rows(RowFunction rhs, int n, double shift) {
  std::vector<RowFunction> rows;
  rows.reserve(n + 1);
  rows.push_back(std::move(rhs));
  for (int j = 1; j <= n; ++j) {
    rows.emplace_back([j, shift](double t) {
      return -int_power(t / kTwoPi + shift, j - 1);
    });
  }
  return rows;
}

Eigen::VectorXd harmonic_costs(int n) {
  Eigen::VectorXd c(n);
  for (int j = 1; j <= n; ++j) c[j - 1] = 1.0 / j;
  return c;
}

void check_n(int id, int n) {
  if (n < 5 || n > 8) {
    throw InvalidArgument("example " + std::to_string(id) +
                          " supports n in {5,6,7,8}, got " + std::to_string(n));
  }
}

}  // namespace

SipInstance::SipInstance(std::string label, Eigen::VectorXd c,
                         std::vector<RowFunction> rows,
                         AnalyticCoefficients reflected_coefficients)
    : label_(std::move(label)),
      c_(std::move(c)),
      rows_(std::move(rows)),
      reflected_coefficients_(std::move(reflected_coefficients)) {
  if (c_.size() < 1) throw InvalidArgument("instance needs n >= 1");
  if (static_cast<Eigen::Index>(rows_.size()) != c_.size() + 1) {
    throw InvalidArgument("instance needs n + 1 = " +
                          std::to_string(c_.size() + 1) + " rows, got " +
                          std::to_string(rows_.size()));
  }
  if (!c_.allFinite()) throw InvalidArgument("cost vector is not finite");
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    if (!rows_[j]) {
      throw InvalidArgument("row " + std::to_string(j) + " is empty");
    }
  }
}

std::complex<double> SipInstance::analytic_coefficient(int j, int k) const {
  if (!reflected_coefficients_) {
    throw InvalidArgument("instance '" + label_ +
                          "' has no closed-form coefficients");
  }
  return reflected_coefficients_(j, k);
}

EvaluationGrid::EvaluationGrid(std::vector<double> points)
    : points_(std::move(points)) {
  if (points_.size() < 2) throw InvalidArgument("grid needs >= 2 points");
  if (points_.front() < 0.0 || points_.back() > kTwoPi) {
    throw InvalidArgument("grid points must lie in [0, 2pi]");
  }
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i] > points_[i - 1])) {
      throw InvalidArgument("grid points must be strictly increasing");
    }
  }
}

EvaluationGrid EvaluationGrid::uniform(int density) {
  if (density < 2) throw InvalidArgument("grid density must be >= 2");
  std::vector<double> points(density);
  for (int i = 0; i < density; ++i) {
    points[i] = kTwoPi * static_cast<double>(i) / (density - 1);
  }
  points.back() = kTwoPi;
  return EvaluationGrid(std::move(points));
}

std::vector<ExampleInfo> builtin_catalog() {
  return {
      {1, 5, 8, "min sum x_j/j s.t. -sum (t/2pi)^(j-1) x_j <= -tan(t/2pi)"},
      {2, 5, 8,
       "min sum x_j s.t. -sum (t/2pi+1)^(j-1) x_j <= -2pi/sqrt(4pi^2+t^2)"},
      {3, 8, 8, "min sum x_j/j s.t. -sum (t/2pi)^(j-1) x_j <= -2pi/(4pi-t)"},
      {4, 9, 9,
       "min sum x_j/j s.t. -sum (t/2pi)^(j-1) x_j <= -4pi^2/(4pi^2+t^2)"},
      {5, 10, 10,
       "min -sum 0.95^(2j-1) x_j s.t. -sum 2cos((2j-1)t/2) x_j <= 1"},
  };
}

SipInstance builtin_example(int id, int n) {
  switch (id) {
    case 1: {
      check_n(id, n);
      auto rhs = [](double t) { return -std::tan(t / kTwoPi); };
      return SipInstance("example1_n" + std::to_string(n), harmonic_costs(n),
                         polynomial_rows(rhs, n, 0.0));
    }
    case 2: {
      check_n(id, n);
      auto rhs = [](double t) {
        return -kTwoPi / std::sqrt(4.0 * kPi * kPi + t * t);
      };
      return SipInstance("example2_n" + std::to_string(n),
                         Eigen::VectorXd::Ones(n),
                         polynomial_rows(rhs, n, 1.0));
    }
    case 3: {
      auto rhs = [](double t) { return -kTwoPi / (4.0 * kPi - t); };
      return SipInstance("example3", harmonic_costs(8),
                         polynomial_rows(rhs, 8, 0.0));
    }
    case 4: {
      auto rhs = [](double t) {
        return -4.0 * kPi * kPi / (4.0 * kPi * kPi + t * t);
      };
      return SipInstance("example4", harmonic_costs(9),
                         polynomial_rows(rhs, 9, 0.0));
    }
    case 5: {
      constexpr int kDim = 10;
      Eigen::VectorXd c(kDim);
      std::vector<RowFunction> rows;
      rows.emplace_back([](double) { return 1.0; });
      for (int j = 1; j <= kDim; ++j) {
        c[j - 1] = -std::pow(0.95, 2 * j - 1);
        const double freq = 0.5 * (2 * j - 1);
        rows.emplace_back(
            [freq](double t) { return -2.0 * std::cos(freq * t); });
      }
      // Reflection turns -2cos((2j-1)t/2) into 2cos((2j-1)t).
      AnalyticCoefficients coeffs = [](int j, int k) -> std::complex<double> {
        if (j == 0) return k == 0 ? 1.0 : 0.0;
        return k == 2 * j - 1 ? 1.0 : 0.0;
      };
      return SipInstance("example5", std::move(c), std::move(rows),
                         std::move(coeffs));
    }
    default:
      throw InvalidArgument("unknown example id " + std::to_string(id) +
                            " (expected 1..5)");
  }
}

std::optional<double> reference_value(int id, int n) {
  switch (id) {
    case 1: {
      static constexpr double kTable[] = {0.61740424, 0.61608515, 0.61572945,
                                          0.61565322};
      if (n < 5 || n > 8) return std::nullopt;
      return kTable[n - 5];
    }
    case 2:
      if (n < 5 || n > 8) return std::nullopt;
      return 1.0;
    case 3:
      return 0.69314815;
    case 4:
      return 0.78549953;
    case 5:
      return -0.48354840;
    default:
      return std::nullopt;
  }
}

double eval_constraint_row(const SipInstance& instance, int j, double t) {
  if (j < 0 || j > instance.n()) {
    throw InvalidArgument("row index " + std::to_string(j) +
                          " outside 0.." + std::to_string(instance.n()));
  }
  if (!(t >= 0.0 && t <= kTwoPi)) {
    throw InvalidArgument("t = " + std::to_string(t) +
                          " outside [0, 2pi]");
  }
  const double value = instance.row(j, t);
  if (!std::isfinite(value)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "row " << j << " of '" << instance.label()
        << "' is not finite at t = " << t;
    throw NumericalError(msg.str());
  }
  return value;
}

GridMaximum max_constraint_slack(const SipInstance& instance,
                                 const Eigen::VectorXd& x,
                                 const EvaluationGrid& grid) {
  if (x.size() != instance.n()) {
    throw InvalidArgument("x has length " + std::to_string(x.size()) +
                          ", instance has n = " +
                          std::to_string(instance.n()));
  }
  GridMaximum best{0.0, -std::numeric_limits<double>::infinity()};
  for (double t : grid.points()) {
    double g = -eval_constraint_row(instance, 0, t);
    for (int j = 1; j <= instance.n(); ++j) {
      g += eval_constraint_row(instance, j, t) * x[j - 1];
    }
    if (g > best.value) best = {t, g};
  }
  return best;
}

double constraint_violation(const SipInstance& instance,
                            const Eigen::VectorXd& x,
                            const EvaluationGrid& grid) {
  return std::max(0.0, max_constraint_slack(instance, x, grid).value);
}

RowFunction linear_interpolant(std::vector<double> t, std::vector<double> v) {
  if (t.size() != v.size() || t.size() < 2) {
    throw InvalidArgument("sampled row needs matching t/v arrays of length >= 2");
  }
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!(t[i] > t[i - 1])) {
      throw InvalidArgument("sampled row knots must be strictly increasing");
    }
  }
  for (double value : v) {
    if (!std::isfinite(value)) {
      throw InvalidArgument("sampled row values must be finite");
    }
  }
  constexpr double kSlack = 1e-12;
  if (t.front() > kSlack || t.back() < kTwoPi - kSlack) {
    throw InvalidArgument("sampled row knots must cover [0, 2pi]");
  }
  return [t = std::move(t), v = std::move(v)](double s) {
    if (s <= t.front()) return v.front();
    if (s >= t.back()) return v.back();
    const auto it = std::upper_bound(t.begin(), t.end(), s);
    const auto hi = static_cast<std::size_t>(it - t.begin());
    const std::size_t lo = hi - 1;
    const double w = (s - t[lo]) / (t[hi] - t[lo]);
    return (1.0 - w) * v[lo] + w * v[hi];
  };
}

SipInstance instance_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("instance JSON: ") + e.what());
  }
  try {
    const int n = doc.at("n").get<int>();
    const auto c_values = doc.at("c").get<std::vector<double>>();
    if (n < 1 || static_cast<int>(c_values.size()) != n) {
      throw InvalidArgument("instance JSON: c must have length n >= 1");
    }
    const auto& rows_json = doc.at("rows");
    if (!rows_json.is_array() || static_cast<int>(rows_json.size()) != n + 1) {
      throw InvalidArgument("instance JSON: rows must hold n + 1 entries");
    }
    std::vector<RowFunction> rows;
    for (const auto& row : rows_json) {
      const auto kind = row.at("kind").get<std::string>();
      if (kind != "samples") {
        throw InvalidArgument("instance JSON: unsupported row kind '" + kind +
                              "'");
      }
      rows.push_back(linear_interpolant(row.at("t").get<std::vector<double>>(),
                                        row.at("v").get<std::vector<double>>()));
    }
    Eigen::VectorXd c = Eigen::Map<const Eigen::VectorXd>(c_values.data(), n);
    return SipInstance(doc.value("label", std::string("custom")), std::move(c),
                       std::move(rows));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("instance JSON: ") + e.what());
  }
}

SipInstance load_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open instance file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return instance_from_json(buffer.str());
}

}  // namespace trigsip
