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

#include "trigsip/sdp.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <json.hpp>

#include "dual_form_ipm.hpp"
#include "simplex.hpp"
#include "trigsip/error.hpp"

namespace trigsip {

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kUnbounded:
      return "unbounded";
    case SolveStatus::kIterationLimit:
      return "iteration_limit";
    case SolveStatus::kNumericalFailure:
      return "numerical_failure";
  }
  return "unknown";
}

LmiMap LmiMap::toeplitz(int K) {
  if (K < 0) throw InvalidArgument("Toeplitz order must be >= 0");
  return LmiMap(Kind::kToeplitz, K + 1, K + 1, K, 0);
}

LmiMap LmiMap::embedded(int K) {
  if (K < 0) throw InvalidArgument("embedding order must be >= 0");
  return LmiMap(Kind::kEmbedded, 2 * K + 1, 2 * (K + 1), K, 0);
}

LmiMap LmiMap::diagonal(int dim_w, int offset, int size) {
  if (size < 1 || offset < 0 || offset + size > dim_w) {
    throw InvalidArgument("diagonal LMI block outside the variable range");
  }
  return LmiMap(Kind::kDiagonal, dim_w, size, 0, offset);
}

Eigen::MatrixXd LmiMap::apply(const Eigen::VectorXd& w) const {
  if (w.size() != dim_w_) {
    throw InvalidArgument("LMI argument has length " +
                          std::to_string(w.size()) + ", expected " +
                          std::to_string(dim_w_));
  }
  switch (kind_) {
    case Kind::kToeplitz: {
      Eigen::MatrixXd M(size_, size_);
      for (int k = 0; k < size_; ++k) {
        for (int l = 0; l < size_; ++l) M(k, l) = w[std::abs(k - l)];
      }
      return M;
    }
    case Kind::kEmbedded: {
      const int block = order_ + 1;
      Eigen::MatrixXd M(size_, size_);
      for (int k = 0; k < block; ++k) {
        for (int l = 0; l < block; ++l) {
          const double t = w[std::abs(k - l)];
          double s = 0.0;
          if (l > k) s = w[order_ + (l - k)];
          if (k > l) s = -w[order_ + (k - l)];
          M(k, l) = t;
          M(block + k, block + l) = t;
          M(block + k, l) = s;  // S
          M(l, block + k) = s;  // S^T
        }
      }
      return M;
    }
    case Kind::kDiagonal:
      return w.segment(offset_, size_).asDiagonal();
  }
  return {};
}

Eigen::VectorXd LmiMap::adjoint(const Eigen::MatrixXd& Y) const {
  if (Y.rows() != size_ || Y.cols() != size_) {
    throw InvalidArgument("LMI adjoint argument has the wrong size");
  }
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim_w_);
  auto toeplitz_adjoint = [](const auto& B, Eigen::VectorXd& acc, int K) {
    for (int k = 0; k <= K; ++k) acc[0] += B(k, k);
    for (int d = 1; d <= K; ++d) {
      for (int k = 0; k + d <= K; ++k) acc[d] += B(k, k + d) + B(k + d, k);
    }
  };
  switch (kind_) {
    case Kind::kToeplitz:
      toeplitz_adjoint(Y, out, order_);
      break;
    case Kind::kEmbedded: {
      const int block = order_ + 1;
      toeplitz_adjoint(Y.topLeftCorner(block, block), out, order_);
      toeplitz_adjoint(Y.bottomRightCorner(block, block), out, order_);
      const auto lower = Y.bottomLeftCorner(block, block);
      const auto upper = Y.topRightCorner(block, block);
      for (int d = 1; d <= order_; ++d) {
        double acc = 0.0;
        for (int k = 0; k + d <= order_; ++k) {
          acc += lower(k, k + d) - lower(k + d, k);
          acc += upper(k + d, k) - upper(k, k + d);
        }
        out[order_ + d] = acc;
      }
      break;
    }
    case Kind::kDiagonal:
      out.segment(offset_, size_) = Y.diagonal();
      break;
  }
  return out;
}

std::string format_iteration_record(const IterationRecord& r) {
  nlohmann::json line;
  line["iteration"] = r.iteration;
  line["primal_obj"] = r.primal_objective;
  line["dual_obj"] = r.dual_objective;
  line["gap"] = r.gap;
  line["primal_infeas"] = r.primal_infeasibility;
  line["dual_infeas"] = r.dual_infeasibility;
  line["step_primal"] = r.step_primal;
  line["step_dual"] = r.step_dual;
  return line.dump();
}

double min_eigenvalue(const Eigen::MatrixXd& M) {
  if (M.rows() != M.cols() || M.rows() == 0) {
    throw InvalidArgument("min_eigenvalue needs a nonempty square matrix");
  }
  const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
  if ((M - M.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw InvalidArgument("min_eigenvalue needs a symmetric matrix");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(
      0.5 * (M + M.transpose()), Eigen::EigenvaluesOnly);
  return eig.eigenvalues()(0);
}

namespace {

double safe_min_eig(const Eigen::MatrixXd& M) {
  if (M.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(
      0.5 * (M + M.transpose()), Eigen::EigenvaluesOnly);
  return eig.eigenvalues()(0);
}

void validate(const SdpProblem& p, const SdpOptions& options) {
  const int d = p.dim_w();
  if (p.b.size() != d) throw InvalidArgument("objective b must have length dim_w");
  if (p.A.cols() != d && p.A.rows() > 0) {
    throw InvalidArgument("equality matrix A must have dim_w columns");
  }
  if (p.A.rows() != p.a.size()) {
    throw InvalidArgument("equality right-hand side has the wrong length");
  }
  if (!(options.tol >= 1e-12 && options.tol <= 1e-2)) {
    throw InvalidArgument("tol must lie in [1e-12, 1e-2]");
  }
  if (options.max_iters < 1) throw InvalidArgument("max_iters must be >= 1");
  if (!p.b.allFinite() || !p.A.allFinite() || !p.a.allFinite()) {
    throw InvalidArgument("SDP data must be finite");
  }
}

}  // namespace

SdpSolution solve_sdp(const SdpProblem& problem, const SdpOptions& options) {
  validate(problem, options);
  const int d = problem.dim_w();
  const int rows = static_cast<int>(problem.a.size());
  const Eigen::MatrixXd A =
      rows > 0 ? problem.A : Eigen::MatrixXd::Zero(0, d);

  SdpSolution sol;

  // Presolve: keep a maximal independent subset of equality rows.
  std::vector<int> kept;
  if (rows > 0) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A.transpose());
    qr.setThreshold(kPresolveRankThreshold);
    const auto rank = qr.rank();
    const auto& perm = qr.colsPermutation().indices();
    for (Eigen::Index i = 0; i < rank; ++i) kept.push_back(perm[i]);
    std::sort(kept.begin(), kept.end());
    for (int i = 0; i < rows; ++i) {
      if (!std::binary_search(kept.begin(), kept.end(), i)) {
        sol.removed_rows.push_back(i);
      }
    }
  }
  const int r = static_cast<int>(kept.size());
  Eigen::MatrixXd A_kept(r, d);
  Eigen::VectorXd a_kept(r);
  for (int i = 0; i < r; ++i) {
    A_kept.row(i) = A.row(kept[i]);
    a_kept[i] = problem.a[kept[i]];
  }

  // Particular solution and null-space basis of the kept rows.
  Eigen::VectorXd w0 = Eigen::VectorXd::Zero(d);
  Eigen::MatrixXd null_basis = Eigen::MatrixXd::Identity(d, d);
  if (r > 0) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A_kept,
                                          Eigen::ComputeFullU | Eigen::ComputeFullV);
    w0 = svd.solve(a_kept);
    null_basis = svd.matrixV().rightCols(d - r);
    const double residual = (A * w0 - problem.a).norm();
    if (residual > 1e-8 * (1.0 + problem.a.norm())) {
      sol.status = SolveStatus::kInfeasible;
      sol.message = "equality constraints are inconsistent";
      sol.w = w0;
      sol.x_multipliers = Eigen::VectorXd::Zero(rows);
      return sol;
    }
  }
  const int q = d - r;
  const double offset = problem.b.dot(w0);
  const auto& lmi = problem.lmi;
  const int m = lmi.size();

  Eigen::MatrixXd X;
  if (q == 0) {
    // w is pinned by the equalities; only the LMI needs checking.
    const Eigen::MatrixXd C = lmi.apply(w0);
    const double lam = safe_min_eig(C);
    sol.iterations = 0;
    X = Eigen::MatrixXd::Zero(m, m);
    sol.status = lam >= -options.tol * (1.0 + C.norm())
                     ? SolveStatus::kOptimal
                     : SolveStatus::kInfeasible;
    if (sol.status == SolveStatus::kInfeasible) {
      sol.message = "equalities pin w to a point outside the PSD cone";
    }
    sol.w = w0;
  } else {
    detail::DualFormProblem<detail::PsdCone> df;
    df.C = lmi.apply(w0);
    df.A.reserve(q);
    for (int i = 0; i < q; ++i) df.A.push_back(-lmi.apply(null_basis.col(i)));
    df.b = null_basis.transpose() * problem.b;
    df.objective_offset = offset;
    detail::IpmSettings settings{options.tol, options.max_iters, options.log};
    const auto res = detail::solve_dual_form(detail::PsdCone{m}, df, settings);
    sol.status = res.status;
    sol.message = res.message;
    sol.iterations = res.iterations;
    sol.w = w0 + null_basis * res.y;
    X = res.X;
  }
  sol.Y = X;

  // Recover the equality multipliers from b + A^T x + lmi^*(Y) = 0.
  const Eigen::VectorXd target = -(problem.b + lmi.adjoint(X));
  sol.x_multipliers = Eigen::VectorXd::Zero(rows);
  if (r > 0) {
    const Eigen::VectorXd x_kept =
        A_kept.transpose().colPivHouseholderQr().solve(target);
    for (int i = 0; i < r; ++i) sol.x_multipliers[kept[i]] = x_kept[i];
  }

  const Eigen::MatrixXd M = lmi.apply(sol.w);
  sol.value = problem.b.dot(sol.w);
  sol.dual_value = rows > 0 ? -problem.a.dot(sol.x_multipliers) : 0.0;
  sol.gap = std::abs(sol.value - sol.dual_value) /
            (1.0 + std::abs(sol.value) + std::abs(sol.dual_value));
  sol.residuals.primal_equality =
      rows > 0 ? (A * sol.w - problem.a).norm() / (1.0 + problem.a.norm())
               : 0.0;
  Eigen::VectorXd dual_res = problem.b + lmi.adjoint(X);
  if (rows > 0) dual_res += A.transpose() * sol.x_multipliers;
  sol.residuals.dual = dual_res.norm() / (1.0 + problem.b.norm());
  sol.residuals.min_eig_lmi = safe_min_eig(M);
  sol.residuals.min_eig_y = safe_min_eig(X);
  sol.residuals.complementarity = M.cwiseProduct(X).sum();
  return sol;
}

namespace {

LpResult unconstrained_lp(const Eigen::VectorXd& c) {
  LpResult out;
  out.x = Eigen::VectorXd::Zero(c.size());
  out.multipliers = Eigen::VectorXd::Zero(0);
  out.status = c.isZero(0.0) ? SolveStatus::kOptimal : SolveStatus::kUnbounded;
  return out;
}

void validate_lp(const Eigen::VectorXd& c, const Eigen::MatrixXd& A_ub,
                 const Eigen::VectorXd& b_ub) {
  if (c.size() < 1) throw InvalidArgument("LP needs at least one variable");
  if (A_ub.rows() != b_ub.size() || (A_ub.rows() > 0 && A_ub.cols() != c.size())) {
    throw InvalidArgument("LP data dimensions do not match");
  }
  if (!c.allFinite() || !A_ub.allFinite() || !b_ub.allFinite()) {
    throw InvalidArgument("LP data must be finite");
  }
}

}  // namespace

LpResult solve_lp(const Eigen::VectorXd& c, const Eigen::MatrixXd& A_ub,
                  const Eigen::VectorXd& b_ub, const LpOptions& options) {
  validate_lp(c, A_ub, b_ub);
  if (A_ub.rows() == 0) return unconstrained_lp(c);
  if (!(options.tol > 0.0) || options.max_iters < 1) {
    throw InvalidArgument("LP tol must be positive and max_iters >= 1");
  }

  // Simplex on the dual  min b^T lambda  s.t.  A^T lambda = -c, lambda >= 0;
  // the row multipliers of that program are x.
  const Eigen::MatrixXd G = A_ub.transpose();
  const auto dual = detail::simplex_standard_form(G, -c, b_ub, options.tol,
                                                  options.max_iters);
  LpResult out;
  out.iterations = dual.iterations;
  switch (dual.status) {
    case SolveStatus::kOptimal:
      out.status = SolveStatus::kOptimal;
      out.x = dual.pi;
      out.value = c.dot(out.x);
      out.multipliers = dual.v;
      return out;
    case SolveStatus::kUnbounded:
      out.status = SolveStatus::kInfeasible;
      return out;
    case SolveStatus::kInfeasible: {
      // Dual infeasible: the LP is unbounded when it has a feasible point.
      const auto probe = detail::simplex_standard_form(
          G, Eigen::VectorXd::Zero(c.size()), b_ub, options.tol, options.max_iters);
      out.iterations += probe.iterations;
      out.status = probe.status == SolveStatus::kOptimal ? SolveStatus::kUnbounded
                   : probe.status == SolveStatus::kUnbounded
                       ? SolveStatus::kInfeasible
                       : probe.status;
      return out;
    }
    default:
      out.status = dual.status;
      return out;
  }
}

LpResult solve_lp_via_sdp(const Eigen::VectorXd& c, const Eigen::MatrixXd& A_ub,
                          const Eigen::VectorXd& b_ub,
                          const SdpOptions& options) {
  validate_lp(c, A_ub, b_ub);
  if (A_ub.rows() == 0) return unconstrained_lp(c);
  const auto n = static_cast<int>(c.size());
  const auto m = static_cast<int>(A_ub.rows());

  // w = (x, s):  max -c^T x  s.t.  A_ub x + s = b_ub,  diag(s) >= 0.
  SdpProblem sdp;
  sdp.lmi = LmiMap::diagonal(n + m, n, m);
  sdp.b = Eigen::VectorXd::Zero(n + m);
  sdp.b.head(n) = -c;
  sdp.A.resize(m, n + m);
  sdp.A << A_ub, Eigen::MatrixXd::Identity(m, m);
  sdp.a = b_ub;
  const SdpSolution sol = solve_sdp(sdp, options);

  LpResult out;
  out.status = sol.status;
  out.x = sol.w.head(n);
  out.value = c.dot(out.x);
  out.multipliers = -sol.x_multipliers;
  out.iterations = sol.iterations;
  return out;
}

}  // namespace trigsip
