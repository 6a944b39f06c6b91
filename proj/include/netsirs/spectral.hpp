#pragma once

#include "netsirs/core_model.hpp"

namespace netsirs {

struct SpectralOptions {
  double tol = 1e-10;
  int max_iter = 100000;
  // Power iteration runs on M + shift*I so periodic support graphs converge.
  double shift = 1.0;
};

/// Dominant (Perron) eigenpair of a nonnegative irreducible matrix.
struct SpectralResult {
  double lambda = 0.0;
  Vector v_right;  // unit 1-norm, positive
  Vector v_left;   // unit 1-norm, positive
  int iterations = 0;
  double residual = 0.0;  // ||M v_right - lambda v_right||_inf
};

struct CollatzWielandt {
  double lower;
  double upper;
};

/// min_i (Mx)_i/x_i and max_i (Mx)_i/x_i for a positive vector x. These
/// sandwich the spectral radius of a nonnegative matrix.
CollatzWielandt collatz_wielandt_bounds(const Matrix& M, const Vector& x);

/// Shifted power iteration on M (right vector) and M^T (left vector). Each run
/// stops once its Collatz-Wielandt gap drops to tol (scaled by max(1, upper)).
SpectralResult dominant_eigen(const Matrix& M, const SpectralOptions& opts = {});

struct ReproductionNumber {
  double r0;
  SpectralResult spectral;
};

/// R0 = rho([gamma]^-1 W), independent of delta.
ReproductionNumber reproduction_number(const ModelInstance& model, const SpectralOptions& opts = {});

}  // namespace netsirs
