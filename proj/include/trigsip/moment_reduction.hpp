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

#include <string>

#include <Eigen/Core>

#include "trigsip/sdp.hpp"
#include "trigsip/spectral.hpp"

namespace trigsip {

// Real moment program built from an even (all-real) coefficient table:
//
//   max  -p^T w   s.t.  E w = -c,  T(w) PSD,
//
// with p_0 = r_{0,0}, p_k = 2 r_{0,k}, E_{jk} likewise from row j. Its
// SDP dual is  min c^T x  s.t.  T^*(Y) + E^T x = p,  Y PSD.
struct MomentLmi {
  int K = 0;
  Eigen::VectorXd p;  // K + 1
  Eigen::MatrixXd E;  // n x (K + 1)
  Eigen::VectorXd c;  // n

  int n() const { return static_cast<int>(c.size()); }
};

// Complex moment program in real form (moments y_k = w_k + i v_k):
//
//   max  -(p^T w - q^T v)   s.t.  E w - F v = -c,
//        [[T(w), S(v)^T], [S(v), T(w)]] PSD.
struct EmbeddedLmi {
  int K = 0;
  Eigen::VectorXd p;  // K + 1
  Eigen::VectorXd q;  // K, q_k = 2 s_{0,k}
  Eigen::MatrixXd E;  // n x (K + 1)
  Eigen::MatrixXd F;  // n x K, F_{jk} = 2 s_{j,k}
  Eigen::VectorXd c;

  int n() const { return static_cast<int>(c.size()); }
  int block_dim() const { return 2 * (K + 1); }
};

MomentLmi build_real_moment_program(const FourierTable& table,
                                    const Eigen::VectorXd& c);
EmbeddedLmi build_complex_moment_program(const FourierTable& table,
                                         const Eigen::VectorXd& c);

// Standard-form SDP whose equality multipliers are the SIP solution x.
SdpProblem to_sdp(const MomentLmi& lmi);
SdpProblem to_sdp(const EmbeddedLmi& lmi);

// (k, l) -> w[|k - l|].
Eigen::MatrixXd toeplitz_from_moments(const Eigen::VectorXd& w);
// v = (v_1..v_K) -> skew matrix with +v_j where l - k = j, -v_j where
// k - l = j.
Eigen::MatrixXd skew_from_moments(const Eigen::VectorXd& v);
// [[W, V^T], [V, W]]: PSD exactly when W + iV is PSD as a Hermitian matrix.
Eigen::MatrixXd embed_hermitian(const Eigen::MatrixXd& W,
                                const Eigen::MatrixXd& V);

std::string to_json(const MomentLmi& lmi);
std::string to_json(const EmbeddedLmi& lmi);

}  // namespace trigsip
