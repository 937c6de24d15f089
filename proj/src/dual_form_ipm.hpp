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

// Infeasible-start primal-dual interior-point method for the pair
//
//   (primal)  min <C, X>   s.t. <A_i, X> = b_i,  X in cone
//   (dual)    max b^T y    s.t. C - sum_i y_i A_i = Z,  Z in cone
//
// using the HKM search direction with a Mehrotra predictor-corrector. The
// cone is a policy type.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "trigsip/sdp.hpp"

namespace trigsip::detail {

struct PsdCone {
  using Elem = Eigen::MatrixXd;
  int m;

  Elem identity() const { return Elem::Identity(m, m); }
  double nu() const { return m; }
  static double inner(const Elem& a, const Elem& b) {
    return a.cwiseProduct(b).sum();
  }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem sym(const Elem& a) { return 0.5 * (a + a.transpose()); }
  static bool inverse(const Elem& z, Elem& out) {
    Eigen::LLT<Elem> llt(z);
    if (llt.info() != Eigen::Success) return false;
    out = llt.solve(Elem::Identity(z.rows(), z.cols()));
    out = sym(out);
    return true;
  }
  // Largest alpha with x + alpha dx PSD (infinity when unrestricted).
  static double max_step(const Elem& x, const Elem& dx) {
    Eigen::LLT<Elem> llt(x);
    if (llt.info() != Eigen::Success) return 0.0;
    const Elem L = llt.matrixL();
    Elem tmp = L.triangularView<Eigen::Lower>().solve(dx);
    tmp = L.triangularView<Eigen::Lower>().solve(tmp.transpose()).transpose();
    Eigen::SelfAdjointEigenSolver<Elem> eig(sym(tmp), Eigen::EigenvaluesOnly);
    const double lambda = eig.eigenvalues().minCoeff();
    if (lambda >= 0.0) return std::numeric_limits<double>::infinity();
    return -1.0 / lambda;
  }
};

template <class Cone>
struct DualFormProblem {
  using Elem = typename Cone::Elem;
  Elem C;
  std::vector<Elem> A;
  Eigen::VectorXd b;
  // Added to both objectives when judging the relative gap and the
  // unboundedness threshold, so they refer to the caller's objective.
  double objective_offset = 0.0;
};

template <class Cone>
struct DualFormResult {
  using Elem = typename Cone::Elem;
  SolveStatus status = SolveStatus::kNumericalFailure;
  Elem X;
  Elem Z;
  Eigen::VectorXd y;
  int iterations = 0;
  double primal_objective = 0.0;  // <C, X> + offset
  double dual_objective = 0.0;    // b^T y + offset
  std::string message;
};

struct IpmSettings {
  double tol = 1e-8;
  int max_iters = 200;
  std::function<void(const IterationRecord&)> log;
};

template <class Cone>
DualFormResult<Cone> solve_dual_form(const Cone& cone,
                                     const DualFormProblem<Cone>& problem,
                                     const IpmSettings& settings) {
  using Elem = typename Cone::Elem;
  const auto q = static_cast<int>(problem.A.size());
  const double nu = cone.nu();

  auto apply_a = [&](const Elem& x) {
    Eigen::VectorXd out(q);
    for (int i = 0; i < q; ++i) out[i] = Cone::inner(problem.A[i], x);
    return out;
  };
  auto apply_at = [&](const Eigen::VectorXd& y) {
    Elem out = 0.0 * problem.C;
    for (int i = 0; i < q; ++i) out += y[i] * problem.A[i];
    return out;
  };

  const double norm_b = problem.b.norm();
  const double norm_c = std::sqrt(Cone::inner(problem.C, problem.C));
  double max_norm_a = 0.0;
  double ratio = 0.0;
  for (int i = 0; i < q; ++i) {
    const double na = std::sqrt(Cone::inner(problem.A[i], problem.A[i]));
    max_norm_a = std::max(max_norm_a, na);
    ratio = std::max(ratio, (1.0 + std::abs(problem.b[i])) / (1.0 + na));
  }
  const double root_nu = std::sqrt(nu);
  const double xi_primal = std::max({10.0, root_nu, nu * ratio});
  const double xi_dual =
      std::max({10.0, root_nu, std::max(max_norm_a, norm_c)});

  DualFormResult<Cone> result;
  Elem X = xi_primal * cone.identity();
  Elem Z = xi_dual * cone.identity();
  Eigen::VectorXd y = Eigen::VectorXd::Zero(q);
  const Elem I = cone.identity();

  double step_p = 0.0;
  double step_d = 0.0;
  Elem z_inv;
  for (int iter = 0;; ++iter) {
    const Eigen::VectorXd rp = problem.b - apply_a(X);
    const Elem rd = problem.C - Z - apply_at(y);
    const double pobj = Cone::inner(problem.C, X) + problem.objective_offset;
    const double dobj = problem.b.dot(y) + problem.objective_offset;
    const double rel_p = rp.norm() / (1.0 + norm_b);
    const double rel_d = std::sqrt(Cone::inner(rd, rd)) / (1.0 + norm_c);
    const double rel_gap =
        std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
    const double mu = Cone::inner(X, Z) / nu;

    if (settings.log) {
      settings.log({iter, dobj, pobj, Cone::inner(X, Z), rel_d, rel_p, step_p,
                    step_d});
    }
    result.iterations = iter;
    result.X = X;
    result.Z = Z;
    result.y = y;
    result.primal_objective = pobj;
    result.dual_objective = dobj;

    if (rel_p <= settings.tol && rel_d <= settings.tol &&
        rel_gap <= settings.tol) {
      result.status = SolveStatus::kOptimal;
      return result;
    }
    // Divergence tests measure residuals against the iterate size, since
    // the absolute residual of a diverging iterate grows with it.
    const double scale_d = 1.0 + norm_c + max_norm_a * y.lpNorm<1>();
    const double scale_p =
        1.0 + norm_b + max_norm_a * std::sqrt(Cone::inner(X, X));
    if (dobj > kUnboundedThreshold &&
        std::sqrt(Cone::inner(rd, rd)) <= settings.tol * scale_d) {
      result.status = SolveStatus::kUnbounded;
      result.message = "objective exceeded the unboundedness threshold";
      return result;
    }
    if (pobj < -kUnboundedThreshold && rp.norm() <= settings.tol * scale_p) {
      result.status = SolveStatus::kInfeasible;
      result.message = "multiplier objective diverged; LMI side infeasible";
      return result;
    }
    if (iter >= settings.max_iters) {
      result.status = SolveStatus::kIterationLimit;
      result.message = "iteration limit reached";
      return result;
    }
    if (!Cone::inverse(Z, z_inv)) {
      result.status = SolveStatus::kNumericalFailure;
      result.message = "slack lost positive definiteness at iteration " +
                       std::to_string(iter);
      return result;
    }

    // Schur complement M_ij = <A_i, X A_j Z^-1>.
    std::vector<Elem> xaz(q);
    Eigen::MatrixXd schur(q, q);
    for (int j = 0; j < q; ++j) {
      xaz[j] = Cone::mul(Cone::mul(X, problem.A[j]), z_inv);
      for (int i = 0; i < q; ++i) schur(i, j) = Cone::inner(problem.A[i], xaz[j]);
    }
    schur = 0.5 * (schur + schur.transpose()).eval();
    // Tiny diagonal shifts rescue factorizations that lose definiteness to
    // roundoff; refinement below restores accuracy against the true matrix.
    Eigen::LLT<Eigen::MatrixXd> schur_llt(schur);
    const double diag_scale = std::max(1.0, schur.diagonal().cwiseAbs().maxCoeff());
    for (double shift = 1e-15; schur_llt.info() != Eigen::Success; shift *= 100.0) {
      if (shift > 1e-6) {
        result.status = SolveStatus::kNumericalFailure;
        result.message = "Schur complement factorization failed at iteration " +
                         std::to_string(iter);
        return result;
      }
      Eigen::MatrixXd shifted = schur;
      shifted.diagonal().array() += shift * diag_scale;
      schur_llt.compute(shifted);
    }
    auto schur_solve = [&](const Eigen::VectorXd& rhs) {
      Eigen::VectorXd sol = schur_llt.solve(rhs);
      for (int pass = 0; pass < 2; ++pass) sol += schur_llt.solve(rhs - schur * sol);
      return sol;
    };
    // A slack residual already below tolerance is roundoff; feeding it through
    // X Z^-1 would only amplify it.
    const Elem rd_step = rel_d <= 0.1 * settings.tol ? Elem(0.0 * rd) : rd;
    const Eigen::VectorXd base_rhs =
        rp + apply_a(Cone::mul(Cone::mul(X, rd_step), z_inv));

    struct Direction {
      Elem dx;
      Eigen::VectorXd dy;
      Elem dz;
    };
    // Solves  A(dX) = rp,  A^T(dy) + dZ = rd,  X dZ + dX Z = rc.
    auto direction = [&](const Elem& rc) {
      const Eigen::VectorXd rhs = base_rhs - apply_a(Cone::mul(rc, z_inv));
      Direction d;
      d.dy = schur_solve(rhs);
      d.dz = rd_step - apply_at(d.dy);
      d.dx = Cone::sym(Cone::mul(rc - Cone::mul(X, d.dz), z_inv));
      return d;
    };

    const Elem xz = Cone::mul(X, Z);
    const Direction pred = direction(-xz);
    const double ap = std::min(1.0, Cone::max_step(X, pred.dx));
    const double ad = std::min(1.0, Cone::max_step(Z, pred.dz));
    const double mu_aff =
        Cone::inner(X + ap * pred.dx, Z + ad * pred.dz) / nu;
    const double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);

    const Elem rc = sigma * mu * I - xz - Cone::mul(pred.dx, pred.dz);
    const Direction corr = direction(rc);
    if (!corr.dx.allFinite() || !corr.dz.allFinite() || !corr.dy.allFinite()) {
      result.status = SolveStatus::kNumericalFailure;
      result.message = "non-finite search direction at iteration " +
                       std::to_string(iter);
      return result;
    }
    const double gamma = 0.9 + 0.09 * std::min(ap, ad);
    step_p = std::min(1.0, gamma * Cone::max_step(X, corr.dx));
    step_d = std::min(1.0, gamma * Cone::max_step(Z, corr.dz));
    // Equal steps while infeasible keep residuals shrinking in step with mu.
    if (rel_p > settings.tol || rel_d > settings.tol) {
      step_p = step_d = std::min(step_p, step_d);
    }
    X += step_p * corr.dx;
    X = Cone::sym(X);
    y += step_d * corr.dy;
    Z += step_d * corr.dz;
    Z = Cone::sym(Z);
  }
}

}  // namespace trigsip::detail
