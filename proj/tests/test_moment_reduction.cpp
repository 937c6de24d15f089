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
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "trigsip/error.hpp"
#include "trigsip/moment_reduction.hpp"
#include "trigsip/sdp.hpp"

using namespace trigsip;

namespace {

// Hermitian Toeplitz matrix with first row (y_0, y_1, ..., y_K), y_k = w_k + i v_k,
// entry (k, l) = y_{l-k} for l >= k.
Eigen::MatrixXcd hermitian_toeplitz(const Eigen::VectorXd& w,
                                    const Eigen::VectorXd& v) {
  const int n = static_cast<int>(w.size());
  Eigen::MatrixXcd H(n, n);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      const int d = std::abs(k - l);
      const std::complex<double> y(w(d), d == 0 ? 0.0 : v(d - 1));
      H(k, l) = l >= k ? y : std::conj(y);
    }
  }
  return H;
}

}  // namespace

TEST_SUITE("moment_reduction") {

TEST_CASE("constant rows give unit data") {
  FourierTable table;
  table.K = 3;
  table.N = 16;
  table.r = Eigen::MatrixXd::Zero(2, 4);
  table.s = Eigen::MatrixXd::Zero(2, 4);
  table.r(0, 0) = 1.0;
  table.r(1, 0) = -1.0;
  Eigen::VectorXd c(1);
  c << 1.0;
  const MomentLmi lmi = build_real_moment_program(table, c);
  CHECK(lmi.p == testing::unit(4, 0));
  CHECK(lmi.E.row(0).transpose() == -testing::unit(4, 0));
  table.s(1, 2) = 0.1;
  CHECK_THROWS_AS(build_real_moment_program(table, c), InvalidArgument);
}

TEST_CASE("example 5 analytic program data") {
  const SipInstance inst = builtin_example(5);
  const FourierTable table = fourier_table(inst, 20, 256, CoefficientMode::kAnalytic);
  const MomentLmi lmi = build_real_moment_program(table, inst.c());
  CHECK(lmi.p == testing::unit(21, 0));
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(10, 21);
  for (int j = 1; j <= 10; ++j) expected(j - 1, 2 * j - 1) = 2.0;
  CHECK((lmi.E - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("example 1 program data matches quadrature") {
  const SipInstance inst = builtin_example(1, 5);
  const SipInstance reflected = reflect_even(inst);
  std::vector<std::vector<std::complex<double>>> exact;
  for (int j = 0; j <= 5; ++j) {
    exact.push_back(oracle::quadrature_coefficients(reflected.row_function(j), 8));
  }
  auto worst_error = [&](int N) {
    const FourierTable table = fourier_table(inst, 8, N, CoefficientMode::kReflectThenDft);
    const MomentLmi lmi = build_real_moment_program(table, inst.c());
    double worst = 0.0;
    for (int j = 0; j <= 5; ++j) {
      for (int k = 0; k <= 8; ++k) {
        const double want = (k == 0 ? 1.0 : 2.0) * exact[j][k].real();
        const double got = j == 0 ? lmi.p(k) : lmi.E(j - 1, k);
        worst = std::max(worst, std::abs(got - want));
      }
    }
    return worst;
  };
  // Default N carries the DFT aliasing error of the kinked reflected rows.
  const double e_default = worst_error(default_sample_count(8));
  const double e_fine = worst_error(8192);
  MESSAGE("max |E - 2 r_quad|: N=256 " << e_default << ", N=8192 " << e_fine);
  CHECK(e_default <= 1e-4);
  CHECK(e_fine <= 1e-6);
}

TEST_CASE("complex program data") {
  Eigen::VectorXd c(1);
  c << 1.0;
  const SipInstance inst("cs", c, {[](double t) { return std::cos(t) + std::sin(t); },
                                   [](double) { return -1.0; }});
  const FourierTable table = fourier_table(inst, 3, 64, CoefficientMode::kDirectDft);
  const EmbeddedLmi lmi = build_complex_moment_program(table, c);
  CHECK(lmi.p(1) == doctest::Approx(1.0));
  CHECK(lmi.q(0) == doctest::Approx(1.0));
  CHECK(lmi.block_dim() == 8);
  CHECK(lmi.F.rows() == 1);
  CHECK(lmi.F.cols() == 3);
}

TEST_CASE("complex path on a real table matches the real path") {
  for (int id : {1, 3, 4}) {
    const SipInstance inst = builtin_example(id, 5);
    const FourierTable table = fourier_table(inst, 8, 256, CoefficientMode::kReflectThenDft);
    const EmbeddedLmi embedded = build_complex_moment_program(table, inst.c());
    CHECK(embedded.q.cwiseAbs().maxCoeff() == 0.0);
    CHECK(embedded.F.cwiseAbs().maxCoeff() == 0.0);
    const SdpSolution real = solve_sdp(to_sdp(build_real_moment_program(table, inst.c())));
    const SdpSolution cplx = solve_sdp(to_sdp(embedded));
    REQUIRE(real.status == SolveStatus::kOptimal);
    REQUIRE(cplx.status == SolveStatus::kOptimal);
    CHECK(std::abs(real.value - cplx.value) <= 10 * 1e-8 * (1.0 + std::abs(real.value)));
  }
}

TEST_CASE("embed_hermitian examples") {
  const Eigen::MatrixXd I2 = Eigen::MatrixXd::Identity(2, 2);
  CHECK(embed_hermitian(I2, Eigen::MatrixXd::Zero(2, 2)) ==
        Eigen::MatrixXd::Identity(4, 4));
  Eigen::MatrixXd V(2, 2);
  V << 0, 1, -1, 0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(embed_hermitian(I2, V));
  const Eigen::Vector4d want(0, 0, 2, 2);
  CHECK((eig.eigenvalues() - want).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(min_eigenvalue(embed_hermitian(Eigen::MatrixXd::Zero(2, 2),
                                       Eigen::MatrixXd::Zero(2, 2))) == 0.0);
  Eigen::MatrixXd asym = I2;
  asym(0, 1) = 0.5;
  CHECK_THROWS_AS(embed_hermitian(asym, Eigen::MatrixXd::Zero(2, 2)), InvalidArgument);
  CHECK_THROWS_AS(embed_hermitian(I2, I2), InvalidArgument);
}

TEST_CASE("toeplitz_from_moments examples") {
  CHECK(toeplitz_from_moments(testing::unit(5, 0)) == Eigen::MatrixXd::Identity(5, 5));
  CHECK(toeplitz_from_moments(Eigen::VectorXd::Ones(4)) == Eigen::MatrixXd::Ones(4, 4));
  CHECK(min_eigenvalue(toeplitz_from_moments(Eigen::VectorXd::Ones(4))) >= -1e-12);
  Eigen::VectorXd w(7);
  for (int k = 0; k < 7; ++k) w(k) = std::cos(1.3 * k);
  const Eigen::MatrixXd T = toeplitz_from_moments(w);
  CHECK(oracle::min_eigenvalue_bisection(T) >= -1e-10);
  CHECK(T(2, 5) == w(3));
}

TEST_CASE("skew_from_moments layout") {
  Eigen::VectorXd v(2);
  v << 0.4, -0.2;
  const Eigen::MatrixXd S = skew_from_moments(v);
  REQUIRE(S.rows() == 3);
  CHECK(S(0, 1) == 0.4);
  CHECK(S(1, 0) == -0.4);
  CHECK(S(0, 2) == -0.2);
  CHECK(S(2, 1) == -0.4);
  CHECK((S + S.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("property: embedding doubles the Hermitian spectrum") {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> normal;
  int agree = 0, total = 0;
  for (int K : {2, 5, 10}) {
    for (int trial = 0; trial < 100; ++trial) {
      Eigen::VectorXd w(K + 1), v(K);
      for (int k = 0; k <= K; ++k) w(k) = normal(rng);
      for (int k = 0; k < K; ++k) v(k) = normal(rng);
      // Shift half of the draws towards PSD so both verdicts occur.
      if (trial % 2 == 0) w(0) += 2.0 * std::sqrt(static_cast<double>(K + 1)) * 1.5;
      const Eigen::MatrixXcd H = hermitian_toeplitz(w, v);
      const Eigen::MatrixXd W = toeplitz_from_moments(w);
      const Eigen::MatrixXd V = H.imag();
      CHECK((V - skew_from_moments(v)).cwiseAbs().maxCoeff() == 0.0);
      const Eigen::MatrixXd B = embed_hermitian(W, V);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> herm(H);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> emb(B);
      Eigen::VectorXd doubled(2 * (K + 1));
      for (int i = 0; i <= K; ++i) {
        doubled(2 * i) = herm.eigenvalues()(i);
        doubled(2 * i + 1) = herm.eigenvalues()(i);
      }
      CHECK((doubled - emb.eigenvalues()).cwiseAbs().maxCoeff() <= 1e-8);
      const bool herm_psd = herm.eigenvalues().minCoeff() >= 0.0;
      const bool emb_psd = min_eigenvalue(B) >= 0.0;
      if (herm_psd == emb_psd) ++agree;
      ++total;
    }
  }
  CHECK(agree == total);
}

TEST_CASE("property: atomic measures give PSD moment matrices") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi), weight(0.0, 1.0);
  std::uniform_int_distribution<int> atoms(1, 6), order(1, 10);
  for (int trial = 0; trial < 100; ++trial) {
    const int K = order(rng);
    const int m = atoms(rng);
    Eigen::VectorXd w = Eigen::VectorXd::Zero(K + 1), v = Eigen::VectorXd::Zero(K);
    for (int i = 0; i < m; ++i) {
      const double t = angle(rng), lambda = weight(rng);
      for (int k = 0; k <= K; ++k) w(k) += lambda * std::cos(k * t);
      for (int k = 1; k <= K; ++k) v(k - 1) -= lambda * std::sin(k * t);
    }
    const Eigen::MatrixXd B = embed_hermitian(toeplitz_from_moments(w), skew_from_moments(v));
    CHECK(min_eigenvalue(B) >= -1e-10);
  }
}

TEST_CASE("lmi maps agree with the moment helpers") {
  Eigen::VectorXd w(4);
  w << 2.0, 0.3, -0.1, 0.05;
  CHECK(LmiMap::toeplitz(3).apply(w) == toeplitz_from_moments(w));
  Eigen::VectorXd wv(7);
  wv << 2.0, 0.3, -0.1, 0.05, 0.2, -0.4, 0.1;
  Eigen::VectorXd v(3);
  v << 0.2, -0.4, 0.1;
  CHECK(LmiMap::embedded(3).apply(wv) ==
        embed_hermitian(toeplitz_from_moments(w), skew_from_moments(v)));
}

TEST_CASE("JSON mirrors") {
  const SipInstance inst = builtin_example(3);
  const FourierTable table = fourier_table(inst, 4, 64, CoefficientMode::kReflectThenDft);
  const std::string real = to_json(build_real_moment_program(table, inst.c()));
  const std::string cplx = to_json(build_complex_moment_program(table, inst.c()));
  CHECK(real.find("\"E\"") != std::string::npos);
  CHECK(cplx.find("\"F\"") != std::string::npos);
  CHECK(cplx.find("\"q\"") != std::string::npos);
}

}  // TEST_SUITE
