#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "netsirs/core_model.hpp"
#include "netsirs/spectral.hpp"

namespace netsirs {

/// Width of the band around R0 = 1 inside which no endemic branch is reported.
inline constexpr double kR0Tol = 1e-9;

struct SolverOptions {
  double tol = 1e-12;
  long max_iter = 1000000;
  bool keep_iterates = false;
};

/// Psi(y, alpha)_i = y_i / (1 + (1 + alpha_i) y_i)
Vector psi(const Vector& y, const Vector& alpha);

/// Phi(y, M, alpha) = Psi(M y, alpha)
Vector phi(const Vector& y, const Matrix& M, const Vector& alpha);

struct PhiIterationLog {
  std::vector<Vector> iterates;  // filled only when keep_iterates is set
  bool converged = false;
  double final_gap = 0.0;
  long steps = 0;
};

struct PhiIterationResult {
  Vector limit;
  PhiIterationLog log;
};

/// Runs xi_{k+1} = Phi(xi_k) until the sup-norm step is at most tol.
/// Each component update only reads the entries of xi on its row support, so
/// the loop is the node-local (distributed) scheme written sequentially.
PhiIterationResult iterate_phi(const Vector& xi0, const Matrix& M, const Vector& alpha,
                               const SolverOptions& opts = {});

struct EndemicEquilibrium {
  Vector y_star;
  Vector z_star;
  Vector x_star;
  long iterations = 0;
  double residual = 0.0;     // ||y* - Phi(y*)||_inf
  double bracket_gap = 0.0;  // ||upper - lower||_inf at termination
  double epsilon_star = 0.0;
  double r0 = 0.0;
};

struct NoEndemic {
  double r0 = 0.0;
  bool near_threshold = false;
};

using EndemicResult = std::variant<EndemicEquilibrium, NoEndemic>;

/// Optional hook invoked with (k, lower_k, upper_k) at every bracketing step.
using BracketObserver = std::function<void(long k, const Vector& lower, const Vector& upper)>;

/// Endemic equilibrium by two-sided monotone iteration: a nonincreasing
/// sequence from ybar and a nondecreasing one from eps* v (v the right Perron
/// vector of M). Returns NoEndemic when R0 <= 1 + kR0Tol.
EndemicResult solve_endemic(const ModelInstance& model, const SolverOptions& opts = {},
                            const BracketObserver& observer = {});

struct FullPair {
  Vector x_star;
  Vector z_star;
};

/// z* = [gamma][delta]^-1 y*, x* = 1 - y* - z*.
FullPair reconstruct_full(const Vector& y_star, const ModelInstance& model);

/// Closed-form endemic y* when W has constant row sums and the rates are
/// homogeneous; nullopt when the hypotheses fail or R0 <= 1.
std::optional<Vector> out_regular_equilibrium(const ModelInstance& model);

}  // namespace netsirs
