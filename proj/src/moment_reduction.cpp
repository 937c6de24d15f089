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

#include "trigsip/moment_reduction.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <json.hpp>

#include "trigsip/error.hpp"

namespace trigsip {
namespace {

void check_table(const FourierTable& table, const Eigen::VectorXd& c) {
  if (table.rows() != c.size() + 1) {
    throw InvalidArgument("table has " + std::to_string(table.rows()) +
                          " rows but the cost vector implies " +
                          std::to_string(c.size() + 1));
  }
  if (table.r.cols() != table.K + 1 || table.s.cols() != table.K + 1) {
    throw InvalidArgument("table columns do not match K + 1");
  }
}

// Row of (r_{j,0}, 2 r_{j,1}, ..., 2 r_{j,K}).
Eigen::VectorXd folded_real(const FourierTable& table, int j) {
  Eigen::VectorXd out = 2.0 * table.r.row(j).transpose();
  out[0] = table.r(j, 0);
  return out;
}

Eigen::VectorXd folded_imag(const FourierTable& table, int j) {
  return 2.0 * table.s.row(j).tail(table.K).transpose();
}

nlohmann::json vector_json(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

nlohmann::json matrix_json(const Eigen::MatrixXd& m) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out.push_back(vector_json(m.row(i).transpose()));
  }
  return out;
}

}  // namespace

MomentLmi build_real_moment_program(const FourierTable& table,
                                    const Eigen::VectorXd& c) {
  check_table(table, c);
  if (!table.s.isZero(0.0)) {
    throw InvalidArgument(
        "table has nonzero imaginary parts; use the complex moment program");
  }
  MomentLmi lmi;
  lmi.K = table.K;
  lmi.c = c;
  lmi.p = folded_real(table, 0);
  lmi.E.resize(c.size(), table.K + 1);
  for (int j = 1; j <= c.size(); ++j) lmi.E.row(j - 1) = folded_real(table, j);
  return lmi;
}

EmbeddedLmi build_complex_moment_program(const FourierTable& table,
                                         const Eigen::VectorXd& c) {
  check_table(table, c);
  EmbeddedLmi lmi;
  lmi.K = table.K;
  lmi.c = c;
  lmi.p = folded_real(table, 0);
  lmi.q = folded_imag(table, 0);
  lmi.E.resize(c.size(), table.K + 1);
  lmi.F.resize(c.size(), table.K);
  for (int j = 1; j <= c.size(); ++j) {
    lmi.E.row(j - 1) = folded_real(table, j);
    lmi.F.row(j - 1) = folded_imag(table, j);
  }
  return lmi;
}

SdpProblem to_sdp(const MomentLmi& lmi) {
  SdpProblem sdp;
  sdp.lmi = LmiMap::toeplitz(lmi.K);
  sdp.b = -lmi.p;
  sdp.A = lmi.E;
  sdp.a = -lmi.c;
  return sdp;
}

SdpProblem to_sdp(const EmbeddedLmi& lmi) {
  const int K = lmi.K;
  SdpProblem sdp;
  sdp.lmi = LmiMap::embedded(K);
  sdp.b.resize(2 * K + 1);
  sdp.b << -lmi.p, lmi.q;
  sdp.A.resize(lmi.n(), 2 * K + 1);
  sdp.A << lmi.E, -lmi.F;
  sdp.a = -lmi.c;
  return sdp;
}

Eigen::MatrixXd toeplitz_from_moments(const Eigen::VectorXd& w) {
  const auto size = w.size();
  Eigen::MatrixXd T(size, size);
  for (Eigen::Index k = 0; k < size; ++k) {
    for (Eigen::Index l = 0; l < size; ++l) T(k, l) = w[std::abs(k - l)];
  }
  return T;
}

Eigen::MatrixXd skew_from_moments(const Eigen::VectorXd& v) {
  const auto size = v.size() + 1;
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(size, size);
  for (Eigen::Index k = 0; k < size; ++k) {
    for (Eigen::Index l = k + 1; l < size; ++l) {
      S(k, l) = v[l - k - 1];
      S(l, k) = -v[l - k - 1];
    }
  }
  return S;
}

Eigen::MatrixXd embed_hermitian(const Eigen::MatrixXd& W,
                                const Eigen::MatrixXd& V) {
  if (W.rows() != W.cols() || V.rows() != V.cols() || W.rows() != V.rows()) {
    throw InvalidArgument("embed_hermitian needs square blocks of equal size");
  }
  const double scale =
      std::max({1.0, W.cwiseAbs().maxCoeff(), V.cwiseAbs().maxCoeff()});
  if ((W - W.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw InvalidArgument("embed_hermitian: W is not symmetric");
  }
  if ((V + V.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw InvalidArgument("embed_hermitian: V is not skew-symmetric");
  }
  const auto size = W.rows();
  Eigen::MatrixXd out(2 * size, 2 * size);
  out << W, V.transpose(), V, W;
  return out;
}

std::string to_json(const MomentLmi& lmi) {
  nlohmann::json doc;
  doc["kind"] = "real";
  doc["K"] = lmi.K;
  doc["p"] = vector_json(lmi.p);
  doc["E"] = matrix_json(lmi.E);
  doc["c"] = vector_json(lmi.c);
  return doc.dump();
}

std::string to_json(const EmbeddedLmi& lmi) {
  nlohmann::json doc;
  doc["kind"] = "embedded";
  doc["K"] = lmi.K;
  doc["block_dim"] = lmi.block_dim();
  doc["p"] = vector_json(lmi.p);
  doc["q"] = vector_json(lmi.q);
  doc["E"] = matrix_json(lmi.E);
  doc["F"] = matrix_json(lmi.F);
  doc["c"] = vector_json(lmi.c);
  return doc.dump();
}

}  // namespace trigsip
