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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "trigsip/problem_model.hpp"

namespace trigsip {

enum class CoefficientSource { kDft, kAnalytic };

enum class CoefficientMode {
  kReflectThenDft,  // even reflection, then DFT; imaginary parts zeroed
  kDirectDft,       // DFT of the raw rows; imaginary parts kept
  kAnalytic,        // registered closed forms of the reflected rows
};

std::string_view to_string(CoefficientSource source);
std::string_view to_string(CoefficientMode mode);
CoefficientMode parse_coefficient_mode(std::string_view text);

// Truncated Fourier coefficients a_{j,k} = r(j,k) + i s(j,k), k = 0..K, one
// row per constraint function j = 0..n. Negative k follow from
// r_{j,-k} = r_{j,k} and s_{j,-k} = -s_{j,k}.
struct FourierTable {
  int K = 0;
  int N = 0;
  Eigen::MatrixXd r;
  Eigen::MatrixXd s;
  CoefficientSource source = CoefficientSource::kDft;
  // max |s| observed before the zeroing step of the reflected path.
  double max_imag_before_zeroing = 0.0;

  int rows() const { return static_cast<int>(r.rows()); }
};

// a_j(2pi - 2t) on [0, pi], a_j(2t - 2pi) on (pi, 2pi]: even about pi,
// 2pi-periodic, same value range per row.
SipInstance reflect_even(const SipInstance& instance);

// f(2 pi m / N) for m = 0..N-1.
std::vector<double> sample_uniform(const RowFunction& f, int N);

// c_k = (1/N) sum_m samples[m] e^{i k 2pi m / N} for k = 0..K. Power-of-two
// N goes through a radix-2 FFT; other sizes use the direct sum.
std::vector<std::complex<double>> dft_coefficients(
    std::span<const double> samples, int K);

// In-place radix-2 transform, x[k] <- sum_m x[m] e^{sign * 2 pi i k m / N}
// (unnormalised). size must be a power of two.
void fft_radix2(std::span<std::complex<double>> data, int sign);

bool is_power_of_two(int value);

// max(256, 8K) rounded up to a power of two.
int default_sample_count(int K);

FourierTable fourier_table(const SipInstance& instance, int K, int N,
                           CoefficientMode mode);

// Truncated series r0 + sum_{k=1..K} 2 (r_k cos kt + s_k sin kt).
double eval_truncated(const FourierTable& table, int j, double t);

// Evaluates every row of the truncated series on the grid; result is
// rows x grid.density().
Eigen::MatrixXd eval_truncated_grid(const FourierTable& table,
                                    const EvaluationGrid& grid);

std::string table_to_json(const FourierTable& table);
FourierTable table_from_json(std::string_view text);

}  // namespace trigsip
