#include "netsirs/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "netsirs/errors.hpp"

namespace netsirs {

CollatzWielandt collatz_wielandt_bounds(const Matrix& M, const Vector& x) {
  if (M.rows() != M.cols() || x.size() != M.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "collatz_wielandt_bounds: shape mismatch");
  }
  if (x.size() == 0 || !(x.minCoeff() > 0.0)) {
    throw Error(ErrorKind::NonPositiveVector, "test vector must be strictly positive");
  }
  const Vector ratios = (M * x).cwiseQuotient(x);
  return {ratios.minCoeff(), ratios.maxCoeff()};
}

namespace {

struct PowerRun {
  Vector v;
  int iterations;
};

// Power iteration on A + shift*I starting from the uniform vector. The
// Collatz-Wielandt gap of A and of A + shift*I coincide.
PowerRun shifted_power(const Matrix& A, const SpectralOptions& opts) {
  const Eigen::Index n = A.rows();
  Vector v = Vector::Constant(n, 1.0 / static_cast<double>(n));
  for (int k = 1; k <= opts.max_iter; ++k) {
    Vector next = A * v + opts.shift * v;
    next /= next.sum();
    v.swap(next);
    // v stays strictly positive: A + shift*I is primitive for irreducible A.
    const CollatzWielandt cw = collatz_wielandt_bounds(A, v);
    if (cw.upper - cw.lower <= opts.tol * std::max(1.0, std::abs(cw.upper))) {
      return {v, k};
    }
  }
  throw Error(ErrorKind::NoConvergence,
              "power iteration exceeded " + std::to_string(opts.max_iter) + " iterations");
}

}  // namespace

SpectralResult dominant_eigen(const Matrix& M, const SpectralOptions& opts) {
  if (M.rows() != M.cols() || M.rows() == 0) {
    throw Error(ErrorKind::DimensionMismatch, "dominant_eigen needs a nonempty square matrix");
  }
  if (!(opts.tol > 0.0) || opts.max_iter < 1 || !(opts.shift > 0.0)) {
    throw Error(ErrorKind::InvalidConfig, "tol, max_iter and shift must be positive");
  }
  if ((M.array() < 0.0).any()) {
    throw Error(ErrorKind::NegativeEntry, "dominant_eigen needs a nonnegative matrix");
  }
  const bool irreducible = M.rows() == 1 ? M(0, 0) > 0.0 : check_irreducible(M);
  if (!irreducible) {
    throw Error(ErrorKind::NotIrreducible, "support graph is not strongly connected");
  }

  const PowerRun right = shifted_power(M, opts);
  const Matrix Mt = M.transpose();
  const PowerRun left = shifted_power(Mt, opts);

  SpectralResult out;
  out.v_right = right.v;
  out.v_left = left.v;
  out.lambda = left.v.dot(M * right.v) / left.v.dot(right.v);
  out.iterations = std::max(right.iterations, left.iterations);
  out.residual = (M * right.v - out.lambda * right.v).lpNorm<Eigen::Infinity>();
  return out;
}

ReproductionNumber reproduction_number(const ModelInstance& model, const SpectralOptions& opts) {
  SpectralResult s = dominant_eigen(model.M(), opts);
  const double r0 = s.lambda;
  return {r0, std::move(s)};
}

}  // namespace netsirs
