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

#include "trigsip/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <json.hpp>

#include "trigsip/error.hpp"

namespace trigsip {

std::string_view to_string(CoefficientSource source) {
  return source == CoefficientSource::kAnalytic ? "analytic" : "dft";
}

std::string_view to_string(CoefficientMode mode) {
  switch (mode) {
    case CoefficientMode::kReflectThenDft:
      return "reflect_then_dft";
    case CoefficientMode::kDirectDft:
      return "direct_dft";
    case CoefficientMode::kAnalytic:
      return "analytic";
  }
  return "unknown";
}

CoefficientMode parse_coefficient_mode(std::string_view text) {
  if (text == "reflect_then_dft" || text == "reflect") {
    return CoefficientMode::kReflectThenDft;
  }
  if (text == "direct_dft" || text == "direct") {
    return CoefficientMode::kDirectDft;
  }
  if (text == "analytic") return CoefficientMode::kAnalytic;
  throw InvalidArgument("unknown coefficient mode '" + std::string(text) + "'");
}

SipInstance reflect_even(const SipInstance& instance) {
  std::vector<RowFunction> rows;
  rows.reserve(instance.n() + 1);
  for (int j = 0; j <= instance.n(); ++j) {
    rows.emplace_back([f = instance.row_function(j)](double t) {
      const double arg = t <= kPi ? kTwoPi - 2.0 * t : 2.0 * t - kTwoPi;
      return f(std::clamp(arg, 0.0, kTwoPi));
    });
  }
  return SipInstance(instance.label() + "_reflected", instance.c(),
                     std::move(rows));
}

std::vector<double> sample_uniform(const RowFunction& f, int N) {
  if (N < 2) throw InvalidArgument("sample count N must be >= 2");
  std::vector<double> samples(N);
  for (int m = 0; m < N; ++m) {
    const double t = kTwoPi * static_cast<double>(m) / N;
    samples[m] = f(t);
    if (!std::isfinite(samples[m])) {
      throw NumericalError("non-finite sample at t = " + std::to_string(t));
    }
  }
  return samples;
}

bool is_power_of_two(int value) {
  return value > 0 && std::has_single_bit(static_cast<unsigned>(value));
}

int default_sample_count(int K) {
  const int floor = std::max(256, 8 * K);
  return static_cast<int>(std::bit_ceil(static_cast<unsigned>(floor)));
}

void fft_radix2(std::span<std::complex<double>> data, int sign) {
  const std::size_t size = data.size();
  if (!std::has_single_bit(size)) {
    throw InvalidArgument("fft_radix2 needs a power-of-two length");
  }
  // Bit reversal permutation.
  for (std::size_t i = 1, j = 0; i < size; ++i) {
    std::size_t bit = size >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= size; len <<= 1) {
    const std::size_t half = len / 2;
    for (std::size_t k = 0; k < half; ++k) {
      // Twiddles computed directly rather than by recurrence to keep the
      // error at O(eps log N).
      const double angle = sign * kTwoPi * static_cast<double>(k) / len;
      const std::complex<double> w(std::cos(angle), std::sin(angle));
      for (std::size_t start = 0; start < size; start += len) {
        const std::complex<double> u = data[start + k];
        const std::complex<double> v = data[start + k + half] * w;
        data[start + k] = u + v;
        data[start + k + half] = u - v;
      }
    }
  }
}

std::vector<std::complex<double>> dft_coefficients(
    std::span<const double> samples, int K) {
  const int N = static_cast<int>(samples.size());
  if (K < 0) throw InvalidArgument("truncation order K must be >= 0");
  if (N < 2 * K + 2) {
    throw InvalidArgument("sample count N = " + std::to_string(N) +
                          " is below the anti-aliasing floor 2K + 2 = " +
                          std::to_string(2 * K + 2));
  }
  std::vector<std::complex<double>> coeffs(K + 1);
  if (is_power_of_two(N)) {
    std::vector<std::complex<double>> work(samples.begin(), samples.end());
    fft_radix2(work, +1);
    for (int k = 0; k <= K; ++k) coeffs[k] = work[k] / static_cast<double>(N);
    return coeffs;
  }
  for (int k = 0; k <= K; ++k) {
    std::complex<double> sum = 0.0;
    for (int m = 0; m < N; ++m) {
      // Reduce k*m mod N before scaling so the angle stays in [0, 2pi).
      const auto phase = static_cast<double>((static_cast<long long>(k) * m) % N);
      const double angle = kTwoPi * phase / N;
      sum += samples[m] * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    coeffs[k] = sum / static_cast<double>(N);
  }
  return coeffs;
}

FourierTable fourier_table(const SipInstance& instance, int K, int N,
                           CoefficientMode mode) {
  if (K < 0) throw InvalidArgument("truncation order K must be >= 0");
  const int rows = instance.n() + 1;
  FourierTable table;
  table.K = K;
  table.N = N;
  table.r = Eigen::MatrixXd::Zero(rows, K + 1);
  table.s = Eigen::MatrixXd::Zero(rows, K + 1);

  if (mode == CoefficientMode::kAnalytic) {
    if (!instance.has_analytic_coefficients()) {
      throw InvalidArgument("instance '" + instance.label() +
                            "' registers no closed-form coefficients");
    }
    table.source = CoefficientSource::kAnalytic;
    for (int j = 0; j < rows; ++j) {
      for (int k = 0; k <= K; ++k) {
        const auto a = instance.analytic_coefficient(j, k);
        table.r(j, k) = a.real();
        table.s(j, k) = a.imag();
      }
    }
    table.s.col(0).setZero();
    return table;
  }

  if (N < 2 * K + 2) {
    throw InvalidArgument("sample count N = " + std::to_string(N) +
                          " is below the anti-aliasing floor 2K + 2 = " +
                          std::to_string(2 * K + 2));
  }
  table.source = CoefficientSource::kDft;
  const bool reflect = mode == CoefficientMode::kReflectThenDft;
  const SipInstance source = reflect ? reflect_even(instance) : instance;
  for (int j = 0; j < rows; ++j) {
    const auto samples = sample_uniform(source.row_function(j), N);
    const auto coeffs = dft_coefficients(samples, K);
    for (int k = 0; k <= K; ++k) {
      table.r(j, k) = coeffs[k].real();
      table.s(j, k) = coeffs[k].imag();
    }
  }
  // The k = 0 coefficient of a real function is real.
  table.s.col(0).setZero();
  if (!table.r.allFinite() || !table.s.allFinite()) {
    throw NumericalError("Fourier table has non-finite entries");
  }
  if (reflect) {
    table.max_imag_before_zeroing = table.s.cwiseAbs().maxCoeff();
    const double scale = std::max(1.0, table.r.cwiseAbs().maxCoeff());
    if (table.max_imag_before_zeroing > 1e-10 * scale) {
      throw NumericalError(
          "reflected rows produced imaginary coefficients of size " +
          std::to_string(table.max_imag_before_zeroing));
    }
    table.s.setZero();
  }
  return table;
}

double eval_truncated(const FourierTable& table, int j, double t) {
  if (j < 0 || j >= table.rows()) {
    throw InvalidArgument("row index " + std::to_string(j) + " outside 0.." +
                          std::to_string(table.rows() - 1));
  }
  if (!(t >= 0.0 && t <= kTwoPi)) {
    throw InvalidArgument("t = " + std::to_string(t) + " outside [0, 2pi]");
  }
  double value = table.r(j, 0);
  for (int k = 1; k <= table.K; ++k) {
    value += 2.0 * (table.r(j, k) * std::cos(k * t) +
                    table.s(j, k) * std::sin(k * t));
  }
  return value;
}

Eigen::MatrixXd eval_truncated_grid(const FourierTable& table,
                                    const EvaluationGrid& grid) {
  const auto& points = grid.points();
  const auto count = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd cos_basis(table.K + 1, count);
  Eigen::MatrixXd sin_basis(table.K + 1, count);
  for (Eigen::Index i = 0; i < count; ++i) {
    cos_basis(0, i) = 1.0;
    sin_basis(0, i) = 0.0;
    for (int k = 1; k <= table.K; ++k) {
      cos_basis(k, i) = 2.0 * std::cos(k * points[i]);
      sin_basis(k, i) = 2.0 * std::sin(k * points[i]);
    }
  }
  return table.r * cos_basis + table.s * sin_basis;
}

namespace {

nlohmann::json matrix_to_json(const Eigen::MatrixXd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::vector<double> row(m.cols());
    for (Eigen::Index k = 0; k < m.cols(); ++k) row[k] = m(i, k);
    rows.push_back(row);
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const nlohmann::json& rows, int cols) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto row = rows[i].get<std::vector<double>>();
    if (static_cast<int>(row.size()) != cols) {
      throw InvalidArgument("table JSON: row " + std::to_string(i) +
                            " must have K + 1 entries");
    }
    for (int k = 0; k < cols; ++k) m(static_cast<Eigen::Index>(i), k) = row[k];
  }
  return m;
}

}  // namespace

std::string table_to_json(const FourierTable& table) {
  nlohmann::json doc;
  doc["K"] = table.K;
  doc["N"] = table.N;
  doc["r"] = matrix_to_json(table.r);
  doc["s"] = matrix_to_json(table.s);
  doc["source"] = std::string(to_string(table.source));
  return doc.dump();
}

FourierTable table_from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    FourierTable table;
    table.K = doc.at("K").get<int>();
    table.N = doc.at("N").get<int>();
    table.r = matrix_from_json(doc.at("r"), table.K + 1);
    table.s = matrix_from_json(doc.at("s"), table.K + 1);
    if (table.r.rows() != table.s.rows() || table.r.rows() < 1) {
      throw InvalidArgument("table JSON: r and s need the same row count");
    }
    const auto source = doc.at("source").get<std::string>();
    if (source == "dft") {
      table.source = CoefficientSource::kDft;
    } else if (source == "analytic") {
      table.source = CoefficientSource::kAnalytic;
    } else {
      throw InvalidArgument("table JSON: unknown source '" + source + "'");
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("table JSON: ") + e.what());
  }
}

}  // namespace trigsip
