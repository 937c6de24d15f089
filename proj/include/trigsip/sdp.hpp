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

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace trigsip {

enum class SolveStatus {
  kOptimal,
  kInfeasible,
  kUnbounded,
  kIterationLimit,
  kNumericalFailure,
};

std::string_view to_string(SolveStatus status);

// Linear map w -> symmetric matrix, described structurally so the basis
// matrices are never stored.
class LmiMap {
 public:
  enum class Kind { kToeplitz, kEmbedded, kDiagonal };

  // w = (w_0..w_K) -> T(w), T(w)(k,l) = w_{|k-l|}.
  static LmiMap toeplitz(int K);
  // w = (w_0..w_K, v_1..v_K) -> [[T(w), S(v)^T], [S(v), T(w)]] with the
  // skew-Toeplitz S(v)(k,l) = v_{l-k} (l > k), -v_{k-l} (k > l).
  static LmiMap embedded(int K);
  // w -> diag(w[offset], ..., w[offset + size - 1]).
  static LmiMap diagonal(int dim_w, int offset, int size);

  Kind kind() const { return kind_; }
  int dim_w() const { return dim_w_; }
  int size() const { return size_; }

  Eigen::MatrixXd apply(const Eigen::VectorXd& w) const;
  // (<M_0, Y>, ..., <M_{dim_w-1}, Y>) for the basis matrices M_i = apply(e_i).
  Eigen::VectorXd adjoint(const Eigen::MatrixXd& Y) const;

 private:
  LmiMap(Kind kind, int dim_w, int size, int order, int offset)
      : kind_(kind), dim_w_(dim_w), size_(size), order_(order),
        offset_(offset) {}

  Kind kind_;
  int dim_w_;
  int size_;
  int order_;   // K for the Toeplitz-based kinds
  int offset_;  // first diagonal variable
};

//   maximize  b^T w
//   s.t.      A w = a
//             lmi(w) >= 0 (PSD)
struct SdpProblem {
  Eigen::VectorXd b;
  Eigen::MatrixXd A;
  Eigen::VectorXd a;
  LmiMap lmi = LmiMap::toeplitz(0);

  int dim_w() const { return lmi.dim_w(); }
};

struct SdpResiduals {
  double primal_equality = 0.0;  // ||A w - a|| / (1 + ||a||)
  double dual = 0.0;             // ||b + A^T x + lmi^*(Y)|| / (1 + ||b||)
  double min_eig_lmi = 0.0;      // lambda_min(lmi(w))
  double min_eig_y = 0.0;        // lambda_min(Y)
  double complementarity = 0.0;  // <lmi(w), Y>
};

// Multiplier convention: x solves b + A^T x + lmi^*(Y) = 0, so the dual
// program is  min -a^T x  over (x, Y >= 0), and d value / d a = -x.
struct SdpSolution {
  SolveStatus status = SolveStatus::kNumericalFailure;
  Eigen::VectorXd w;
  Eigen::VectorXd x_multipliers;
  Eigen::MatrixXd Y;
  double value = 0.0;       // b^T w
  double dual_value = 0.0;  // -a^T x
  double gap = 0.0;         // |value - dual_value| / (1 + |value| + |dual_value|)
  SdpResiduals residuals;
  int iterations = 0;
  std::vector<int> removed_rows;  // equality rows dropped by presolve
  std::string message;
};

struct IterationRecord {
  int iteration = 0;
  double primal_objective = 0.0;  // moment side, b^T w
  double dual_objective = 0.0;    // multiplier side
  double gap = 0.0;  // complementarity <X, Z>
  double primal_infeasibility = 0.0;
  double dual_infeasibility = 0.0;
  double step_primal = 0.0;
  double step_dual = 0.0;
};

// One JSON object per line.
std::string format_iteration_record(const IterationRecord& record);

struct SdpOptions {
  double tol = 1e-8;
  int max_iters = 200;
  std::function<void(const IterationRecord&)> log;
};

inline constexpr double kUnboundedThreshold = 1e12;
inline constexpr double kPresolveRankThreshold = 1e-10;

SdpSolution solve_sdp(const SdpProblem& problem, const SdpOptions& options = {});

double min_eigenvalue(const Eigen::MatrixXd& M);

struct LpResult {
  SolveStatus status = SolveStatus::kNumericalFailure;
  Eigen::VectorXd x;
  double value = 0.0;
  Eigen::VectorXd multipliers;  // one per inequality row, >= 0
  int iterations = 0;
};

struct LpOptions {
  double tol = 1e-9;       // reduced-cost and phase-one tolerance
  int max_iters = 20000;   // simplex pivots
};

// min c^T x  s.t.  A_ub x <= b_ub, by a revised simplex on the dual.
LpResult solve_lp(const Eigen::VectorXd& c, const Eigen::MatrixXd& A_ub,
                  const Eigen::VectorXd& b_ub, const LpOptions& options = {});

// Same program routed through solve_sdp with slack variables on a diagonal
// LMI block. Dense in the row count, meant for small problems.
LpResult solve_lp_via_sdp(const Eigen::VectorXd& c, const Eigen::MatrixXd& A_ub,
                          const Eigen::VectorXd& b_ub,
                          const SdpOptions& options = {});

}  // namespace trigsip
