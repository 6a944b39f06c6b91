#include "netsirs/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "netsirs/errors.hpp"

namespace netsirs {

Vector psi(const Vector& y, const Vector& alpha) {
  return y.array() / (1.0 + (1.0 + alpha.array()) * y.array());
}

Vector phi(const Vector& y, const Matrix& M, const Vector& alpha) { return psi(M * y, alpha); }

namespace {

double sup_norm(const Vector& v) { return v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>(); }

void require_in_box(const Vector& y, const Vector& ybar, const char* what) {
  if (y.size() != ybar.size()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " has the wrong length");
  }
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (!(y(i) >= 0.0) || y(i) > ybar(i) * (1.0 + 1e-12)) {
      std::ostringstream msg;
      msg << what << "[" << i << "] = " << y(i) << " outside [0, " << ybar(i) << "]";
      throw Error(ErrorKind::OutOfCap, msg.str());
    }
  }
}

}  // namespace

PhiIterationResult iterate_phi(const Vector& xi0, const Matrix& M, const Vector& alpha, const SolverOptions& opts) {
  const Vector ybar = (Vector::Ones(alpha.size()) + alpha).cwiseInverse();
  require_in_box(xi0, ybar, "xi0");
  if (M.rows() != xi0.size() || M.cols() != xi0.size()) {
    throw Error(ErrorKind::DimensionMismatch, "M does not match xi0");
  }

  PhiIterationResult out;
  Vector xi = xi0;
  if (opts.keep_iterates) out.log.iterates.push_back(xi);
  for (long k = 1; k <= opts.max_iter; ++k) {
    Vector next = phi(xi, M, alpha);
    const double step = sup_norm(next - xi);
    xi.swap(next);
    if (opts.keep_iterates) out.log.iterates.push_back(xi);
    out.log.final_gap = step;
    out.log.steps = k;
    if (step <= opts.tol) {
      out.log.converged = true;
      out.limit = std::move(xi);
      return out;
    }
  }
  throw Error(ErrorKind::NoConvergence,
              "Phi iteration exceeded " + std::to_string(opts.max_iter) + " steps");
}

FullPair reconstruct_full(const Vector& y_star, const ModelInstance& model) {
  require_in_box(y_star, model.ybar(), "y*");
  FullPair out;
  out.z_star = model.alpha().cwiseProduct(y_star);
  out.x_star = Vector::Ones(y_star.size()) - y_star - out.z_star;
  // y* <= ybar makes x* >= 0 up to rounding.
  out.x_star = out.x_star.cwiseMax(0.0);
  return out;
}

EndemicResult solve_endemic(const ModelInstance& model, const SolverOptions& opts, const BracketObserver& observer) {
  const ReproductionNumber rn = reproduction_number(model);
  if (rn.r0 <= 1.0 + kR0Tol) {
    return NoEndemic{rn.r0, std::abs(rn.r0 - 1.0) <= kR0Tol};
  }

  const Matrix& M = model.M();
  const Vector& alpha = model.alpha();
  const Vector& ybar = model.ybar();
  const Vector& v = rn.spectral.v_right;

  // Largest eps on the halving ladder with Phi(eps v) >= eps v.
  double eps = ybar.minCoeff() / (2.0 * v.maxCoeff());
  constexpr double kEpsFloor = 1e-300;
  while (true) {
    const Vector start = eps * v;
    if ((phi(start, M, alpha).array() >= start.array()).all()) break;
    eps *= 0.5;
    if (eps < kEpsFloor) {
      throw Error(ErrorKind::EpsilonStarNotFound, "no eps with Phi(eps v) >= eps v above 1e-300; R0 = " +
                                                      std::to_string(rn.r0));
    }
  }

  Vector lower = eps * v;
  Vector upper = ybar;
  EndemicEquilibrium eq;
  eq.epsilon_star = eps;
  eq.r0 = rn.r0;

  long k = 0;
  double gap = sup_norm(upper - lower);
  if (observer) observer(k, lower, upper);
  while (gap > opts.tol) {
    if (k >= opts.max_iter) {
      throw Error(ErrorKind::NoConvergence,
                  "bracketing did not close within " + std::to_string(opts.max_iter) + " steps");
    }
    lower = phi(lower, M, alpha);
    upper = phi(upper, M, alpha);
    ++k;
    if (observer) observer(k, lower, upper);
    const double new_gap = sup_norm(upper - lower);
    // Both sequences have reached floating-point fixed points; further steps
    // cannot shrink the gap.
    if (new_gap >= gap && new_gap <= 1e3 * opts.tol) {
      gap = new_gap;
      break;
    }
    gap = new_gap;
  }

  eq.y_star = 0.5 * (lower + upper);
  eq.iterations = k;
  eq.bracket_gap = gap;
  eq.residual = sup_norm(eq.y_star - phi(eq.y_star, M, alpha));
  const FullPair full = reconstruct_full(eq.y_star, model);
  eq.z_star = full.z_star;
  eq.x_star = full.x_star;
  return eq;
}

std::optional<Vector> out_regular_equilibrium(const ModelInstance& model) {
  const Eigen::Index n = model.size();
  const Vector row_sums = model.W().rowwise().sum();
  const double lambda_w = row_sums(0);
  const double gamma_bar = model.gamma()(0);
  const double delta_bar = model.delta()(0);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(row_sums(i) - lambda_w) > 1e-12) return std::nullopt;
    if (model.gamma()(i) != gamma_bar || model.delta()(i) != delta_bar) return std::nullopt;
  }
  if (!(lambda_w / gamma_bar > 1.0)) return std::nullopt;
  const double value = delta_bar / (gamma_bar + delta_bar) * (1.0 - gamma_bar / lambda_w);
  return Vector::Constant(n, value);
}

}  // namespace netsirs
