#include "netsirs/stability.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "netsirs/dynamics.hpp"
#include "netsirs/equilibrium.hpp"
#include "netsirs/errors.hpp"

namespace netsirs {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Stable: return "Stable";
    case Verdict::Unstable: return "Unstable";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

Matrix jacobian_dfe(const ModelInstance& model) {
  const Eigen::Index n = model.size();
  Matrix J = Matrix::Zero(2 * n, 2 * n);
  J.topLeftCorner(n, n) = model.W();
  J.topLeftCorner(n, n).diagonal() -= model.gamma();
  J.bottomLeftCorner(n, n).diagonal() = model.gamma();
  J.bottomRightCorner(n, n).diagonal() = -model.delta();
  return J;
}

Matrix jacobian_endemic(const ModelInstance& model, const Vector& y_star, const Vector& z_star,
                        double residual_limit) {
  const Eigen::Index n = model.size();
  if (y_star.size() != n || z_star.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "equilibrium length does not match the model");
  }
  const double res = residual(model, y_star, z_star);
  if (res > residual_limit) {
    std::ostringstream msg;
    msg << "||f(y*, z*)||_inf = " << res << " exceeds " << residual_limit;
    throw Error(ErrorKind::NotEquilibrium, msg.str());
  }
  const Vector x_star = Vector::Ones(n) - y_star - z_star;
  const Vector force = model.W() * y_star;

  Matrix J = Matrix::Zero(2 * n, 2 * n);
  J.topLeftCorner(n, n) = x_star.asDiagonal() * model.W();
  J.topLeftCorner(n, n).diagonal() -= force + model.gamma();
  J.topRightCorner(n, n).diagonal() = -force;
  J.bottomLeftCorner(n, n).diagonal() = model.gamma();
  J.bottomRightCorner(n, n).diagonal() = -model.delta();
  return J;
}

double eta_bound(const ModelInstance& model, const Vector& y_star) {
  if (y_star.size() != model.size() || !(y_star.minCoeff() > 0.0)) {
    throw Error(ErrorKind::NonPositiveEquilibrium, "eta needs a strictly positive y*");
  }
  const Vector force = model.W() * y_star;
  return std::min(force.minCoeff(), model.delta().minCoeff());
}

ComplexMatrix schur_matrix(const ModelInstance& model, const Vector& y_star, Complex lambda) {
  const Eigen::Index n = model.size();
  const Vector z_star = model.alpha().cwiseProduct(y_star);
  const Vector x_star = Vector::Ones(n) - y_star - z_star;
  const Vector force = model.W() * y_star;

  ComplexMatrix S = (x_star.asDiagonal() * model.W()).cast<Complex>();
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex shift = model.delta()(i) + lambda;
    if (shift == Complex(0.0, 0.0)) {
      std::ostringstream msg;
      msg << "delta[" << i << "] + lambda = 0";
      throw Error(ErrorKind::SingularShift, msg.str());
    }
    S(i, i) -= force(i) + model.gamma()(i) + lambda + model.gamma()(i) * force(i) / shift;
  }
  return S;
}

std::vector<GershgorinSample> gershgorin_certificate(const ModelInstance& model, const Vector& y_star,
                                                     const std::vector<Complex>& lambda_samples) {
  std::vector<GershgorinSample> out;
  out.reserve(lambda_samples.size());
  const Eigen::Index n = model.size();
  for (const Complex lambda : lambda_samples) {
    const ComplexMatrix H = schur_matrix(model, y_star, lambda) * y_star.cast<Complex>().asDiagonal();
    double margin = std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k < n; ++k) {
      // Off-diagonal entries x*_k W_kj y*_j are real and nonnegative.
      double radius = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j != k) radius += std::abs(H(k, j));
      }
      margin = std::min(margin, -H(k, k).real() - radius);
    }
    out.push_back({lambda, margin > 0.0, margin});
  }
  return out;
}

std::vector<Complex> default_lambda_samples(double eta, unsigned long seed, int random_points) {
  const double left = -eta + 1e-6;
  std::vector<Complex> samples{Complex(left, 0.0), Complex(0.0, 0.0)};
  for (int k = -2; k <= 2; ++k) {
    const double p = std::pow(10.0, k);
    samples.emplace_back(0.0, p);
    samples.emplace_back(0.0, -p);
    samples.emplace_back(p, 0.0);
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(left, 10.0);
  std::uniform_real_distribution<double> im(-10.0, 10.0);
  for (int k = 0; k < random_points; ++k) {
    const double a = re(rng);
    const double b = im(rng);
    samples.emplace_back(a, b);
  }
  return samples;
}

Eigen::VectorXcd eigenvalues(const Matrix& A) {
  if (A.rows() != A.cols() || A.rows() == 0) {
    throw Error(ErrorKind::DimensionMismatch, "eigenvalues needs a nonempty square matrix");
  }
  Eigen::EigenSolver<Matrix> solver(A, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::EigenFailure, "real Schur QR iteration did not converge");
  }
  return solver.eigenvalues();
}

double spectral_abscissa(const Matrix& A) { return eigenvalues(A).real().maxCoeff(); }

double lyapunov_value(const ModelInstance& model, const Vector& v_left, const Vector& y) {
  return v_left.dot(y.cwiseQuotient(model.gamma()));
}

double lyapunov_derivative(const ModelInstance& model, const SpectralResult& spectral, const Vector& y,
                           const Vector& z) {
  const Vector& v = spectral.v_left;
  const Vector weighted = v.cwiseQuotient(model.gamma());
  const Vector force = model.W() * y;
  return (spectral.lambda - 1.0) * v.dot(y) - weighted.dot((y + z).cwiseProduct(force));
}

double rank_one_lyapunov([[maybe_unused]] const Vector& a, const Vector& b, double gamma_bar, const Vector& delta,
                         const FullState& state, const FullState& equilibrium) {
  const double h = b.dot(state.y);
  const double h_star = b.dot(equilibrium.y);
  if (!(h > 0.0)) {
    throw Error(ErrorKind::InvalidAtBoundary, "b^T y = 0, the logarithmic term is undefined");
  }
  const auto xs = equilibrium.x.array();
  const double v1 = 0.5 * (b.array() / xs * (state.x - equilibrium.x).array().square()).sum();
  const double v2 =
      0.5 * (delta.array() * b.array() / (gamma_bar * xs) * (state.z - equilibrium.z).array().square()).sum();
  // h - h* + h* ln(h*/h) written as h*(u - log1p(u)), u = h/h* - 1, which
  // keeps its digits near h = h*.
  const double u = h / h_star - 1.0;
  const double v3 = h_star * (u - std::log1p(u));
  return v1 + v2 + v3;
}

StabilityCertificate certify_endemic(const ModelInstance& model, const Vector& y_star, const Vector& z_star,
                                     const std::vector<Complex>& lambda_samples, double residual_limit) {
  StabilityCertificate cert;
  const Matrix J = jacobian_endemic(model, y_star, z_star, residual_limit);
  cert.eta = eta_bound(model, y_star);
  cert.m_star = (model.W() * y_star).cwiseProduct(y_star).minCoeff();
  cert.spectral_abscissa = spectral_abscissa(J);
  cert.gershgorin_samples = gershgorin_certificate(model, y_star, lambda_samples);
  const bool disks_ok = std::all_of(cert.gershgorin_samples.begin(), cert.gershgorin_samples.end(),
                                    [](const GershgorinSample& s) { return s.all_disks_left; });
  if (cert.spectral_abscissa < 0.0 && disks_ok) {
    cert.verdict = Verdict::Stable;
  } else if (cert.spectral_abscissa > 0.0) {
    cert.verdict = Verdict::Unstable;
  } else {
    cert.verdict = Verdict::Inconclusive;
  }
  return cert;
}

DfeAssessment assess_dfe(const ModelInstance& model, double r0) {
  DfeAssessment out;
  out.abscissa = spectral_abscissa(jacobian_dfe(model));
  if (out.abscissa > 0.0) {
    out.verdict = Verdict::Unstable;
  } else if (out.abscissa < 0.0 || r0 <= 1.0) {
    out.verdict = Verdict::Stable;
  } else {
    out.verdict = Verdict::Inconclusive;
  }
  return out;
}

}  // namespace netsirs
