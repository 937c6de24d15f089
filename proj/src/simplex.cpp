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

#include "simplex.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/LU>

namespace trigsip::detail {
namespace {

constexpr double kPivotTol = 1e-9;
constexpr int kDegenerateRunBeforeBland = 50;

class Tableau {
 public:
  Tableau(const Eigen::MatrixXd& G, const Eigen::VectorXd& h, double tol)
      : G_(G), h_(h), rows_(static_cast<int>(G.rows())),
        cols_(static_cast<int>(G.cols())), tol_(tol) {
    basis_.resize(rows_);
    for (int r = 0; r < rows_; ++r) basis_[r] = cols_ + r;  // artificials
  }

  // Column j of [G, I].
  Eigen::VectorXd column(int j) const {
    if (j < cols_) return G_.col(j);
    Eigen::VectorXd e = Eigen::VectorXd::Zero(rows_);
    e(j - cols_) = 1.0;
    return e;
  }

  bool factor() {
    Eigen::MatrixXd B(rows_, rows_);
    for (int r = 0; r < rows_; ++r) B.col(r) = column(basis_[r]);
    lu_.compute(B);
    lu_t_.compute(B.transpose());
    if (std::abs(lu_.determinant()) == 0.0 || !lu_.matrixLU().allFinite()) {
      return false;
    }
    x_b_ = lu_.solve(h_);
    return x_b_.allFinite();
  }

  // Optimizes `cost` over the current basis. Artificial columns never enter.
  SolveStatus optimize(const Eigen::VectorXd& cost, int max_pivots, int& pivots) {
    const double cost_scale = std::max(1.0, cost.head(cols_).cwiseAbs().maxCoeff());
    int degenerate_run = 0;
    std::vector<char> is_basic(cols_ + rows_, 0);
    for (int b : basis_) is_basic[b] = 1;
    while (true) {
      if (!factor()) return SolveStatus::kNumericalFailure;
      Eigen::VectorXd c_b(rows_);
      for (int r = 0; r < rows_; ++r) c_b(r) = cost(basis_[r]);
      pi_ = lu_t_.solve(c_b);
      const Eigen::VectorXd reduced =
          cost.head(cols_) - G_.transpose() * pi_;

      const bool bland = degenerate_run >= kDegenerateRunBeforeBland;
      int entering = -1;
      double best = -tol_ * cost_scale;
      for (int j = 0; j < cols_; ++j) {
        if (is_basic[j] || reduced(j) >= best) continue;
        entering = j;
        if (bland) break;
        best = reduced(j);
      }
      if (entering < 0) return SolveStatus::kOptimal;
      if (pivots >= max_pivots) return SolveStatus::kIterationLimit;

      const Eigen::VectorXd d = lu_.solve(column(entering));
      const double d_scale = std::max(1.0, d.cwiseAbs().maxCoeff());
      int leaving = -1;
      double theta = 0.0;
      for (int r = 0; r < rows_; ++r) {
        if (d(r) <= kPivotTol * d_scale) continue;
        const double ratio = std::max(0.0, x_b_(r)) / d(r);
        const bool better =
            leaving < 0 || ratio < theta - 1e-12 * (1.0 + theta) ||
            (ratio <= theta + 1e-12 * (1.0 + theta) &&
             (bland ? basis_[r] < basis_[leaving] : d(r) > d(leaving)));
        if (better) {
          leaving = r;
          theta = ratio;
        }
      }
      if (leaving < 0) return SolveStatus::kUnbounded;

      degenerate_run = theta <= 0.0 ? degenerate_run + 1 : 0;
      is_basic[basis_[leaving]] = 0;
      is_basic[entering] = 1;
      basis_[leaving] = entering;
      ++pivots;
    }
  }

  // Pivots zero-level artificials out of the basis where a structural column
  // can replace them. Rows that cannot be cleared are redundant.
  void drive_out_artificials() {
    for (int r = 0; r < rows_; ++r) {
      if (basis_[r] < cols_) continue;
      if (!factor()) return;
      Eigen::VectorXd e = Eigen::VectorXd::Zero(rows_);
      e(r) = 1.0;
      const Eigen::VectorXd row = G_.transpose() * lu_t_.solve(e);
      int best = -1;
      for (int j = 0; j < cols_; ++j) {
        if (std::find(basis_.begin(), basis_.end(), j) != basis_.end()) continue;
        if (std::abs(row(j)) > kPivotTol &&
            (best < 0 || std::abs(row(j)) > std::abs(row(best)))) {
          best = j;
        }
      }
      if (best >= 0) basis_[r] = best;
    }
  }

  double artificial_sum() const {
    double sum = 0.0;
    for (int r = 0; r < rows_; ++r) {
      if (basis_[r] >= cols_) sum += std::max(0.0, x_b_(r));
    }
    return sum;
  }

  Eigen::VectorXd primal() const {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(cols_);
    for (int r = 0; r < rows_; ++r) {
      if (basis_[r] < cols_) v(basis_[r]) = std::max(0.0, x_b_(r));
    }
    return v;
  }

  const Eigen::VectorXd& pi() const { return pi_; }

 private:
  const Eigen::MatrixXd& G_;
  const Eigen::VectorXd& h_;
  int rows_;
  int cols_;
  double tol_;
  std::vector<int> basis_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_t_;
  Eigen::VectorXd x_b_;
  Eigen::VectorXd pi_;
};

}  // namespace

SimplexResult simplex_standard_form(const Eigen::MatrixXd& G,
                                    const Eigen::VectorXd& h,
                                    const Eigen::VectorXd& cost, double tol,
                                    int max_pivots) {
  const int rows = static_cast<int>(G.rows());
  const int cols = static_cast<int>(G.cols());
  SimplexResult result;

  // Flip rows so the artificial start is feasible.
  Eigen::VectorXd sign = Eigen::VectorXd::Ones(rows);
  for (int r = 0; r < rows; ++r) {
    if (h(r) < 0.0) sign(r) = -1.0;
  }
  const Eigen::MatrixXd Gs = sign.asDiagonal() * G;
  const Eigen::VectorXd hs = sign.asDiagonal() * h;

  Tableau tableau(Gs, hs, tol);
  Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(cols + rows);
  phase1.tail(rows).setOnes();
  int pivots = 0;
  SolveStatus status = tableau.optimize(phase1, max_pivots, pivots);
  result.iterations = pivots;
  if (status != SolveStatus::kOptimal) {
    result.status = status;
    return result;
  }
  if (tableau.artificial_sum() > tol * (1.0 + hs.lpNorm<1>())) {
    result.status = SolveStatus::kInfeasible;
    return result;
  }
  tableau.drive_out_artificials();

  Eigen::VectorXd phase2 = Eigen::VectorXd::Zero(cols + rows);
  phase2.head(cols) = cost;
  status = tableau.optimize(phase2, max_pivots, pivots);
  result.iterations = pivots;
  result.status = status;
  if (status == SolveStatus::kOptimal) {
    result.v = tableau.primal();
    result.pi = sign.asDiagonal() * tableau.pi();
  }
  return result;
}

}  // namespace trigsip::detail
