#pragma once

#include <complex>
#include <vector>

#include "netsirs/core_model.hpp"
#include "netsirs/spectral.hpp"

namespace netsirs {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

enum class Verdict { Stable, Unstable, Inconclusive };
std::string_view to_string(Verdict v);

/// Jacobian of the reduced system at the disease-free point:
/// [[W - [gamma], 0], [[gamma], -[delta]]].
Matrix jacobian_dfe(const ModelInstance& model);

/// Jacobian at an endemic equilibrium:
/// [[[x*]W - [Wy*] - [gamma], -[Wy*]], [[gamma], -[delta]]].
/// Throws NotEquilibrium when ||f(y*, z*)||_inf > residual_limit.
Matrix jacobian_endemic(const ModelInstance& model, const Vector& y_star, const Vector& z_star,
                        double residual_limit = 1e-10);

/// min_i min{(W y*)_i, delta_i}
double eta_bound(const ModelInstance& model, const Vector& y_star);

/// S(lambda) = [x*]W - [Wy*] - [gamma] - lambda I - [gamma]([delta] + lambda I)^-1 [Wy*]
/// with x* = 1 - y* - [gamma][delta]^-1 y*.
ComplexMatrix schur_matrix(const ModelInstance& model, const Vector& y_star, Complex lambda);

struct GershgorinSample {
  Complex lambda;
  bool all_disks_left = false;
  // min_k (-Re H_kk - R_k): distance from the imaginary axis to the rightmost
  // point of the union of Gershgorin disks of H(lambda) = S(lambda)[y*].
  double min_margin = 0.0;
};

std::vector<GershgorinSample> gershgorin_certificate(const ModelInstance& model, const Vector& y_star,
                                                     const std::vector<Complex>& lambda_samples);

/// {-eta + 1e-6, 0} u {+-i 10^k, 10^k : k = -2..2} u `random_points` uniform
/// points in [-eta + 1e-6, 10] x [-10i, 10i].
std::vector<Complex> default_lambda_samples(double eta, unsigned long seed = 0, int random_points = 20);

/// Maximum real part over the spectrum of a dense real matrix.
double spectral_abscissa(const Matrix& A);

/// Eigenvalues of a dense real matrix; throws EigenFailure if QR does not converge.
Eigen::VectorXcd eigenvalues(const Matrix& A);

/// V = vbar^T [gamma]^-1 y, vbar the unit 1-norm left Perron vector of M.
double lyapunov_value(const ModelInstance& model, const Vector& v_left, const Vector& y);

/// Vdot = (R0 - 1) vbar^T y - vbar^T [gamma]^-1 [y + z] W y
double lyapunov_derivative(const ModelInstance& model, const SpectralResult& spectral,
                           const Vector& y, const Vector& z);

/// V1 + V2 + V3 for a rank-one interaction W = a b^T with homogeneous recovery
/// rate gamma_bar. Throws InvalidAtBoundary when b^T y = 0.
double rank_one_lyapunov(const Vector& a, const Vector& b, double gamma_bar, const Vector& delta,
                         const FullState& state, const FullState& equilibrium);

struct StabilityCertificate {
  double eta = 0.0;
  double m_star = 0.0;  // min_k (W y*)_k y*_k
  double spectral_abscissa = 0.0;
  std::vector<GershgorinSample> gershgorin_samples;
  Verdict verdict = Verdict::Inconclusive;
};

/// Full endemic certificate: eta, abscissa of the endemic Jacobian and the
/// sampled Gershgorin checks. Stable needs abscissa < 0 and every sample
/// passing; Unstable is reported when the abscissa is positive.
StabilityCertificate certify_endemic(const ModelInstance& model, const Vector& y_star, const Vector& z_star,
                                     const std::vector<Complex>& lambda_samples, double residual_limit = 1e-10);

struct DfeAssessment {
  double abscissa = 0.0;
  Verdict verdict = Verdict::Inconclusive;
};

/// Abscissa of the DFE Jacobian. Negative abscissa or R0 <= 1 (global
/// Lyapunov argument) gives Stable; positive abscissa gives Unstable.
DfeAssessment assess_dfe(const ModelInstance& model, double r0);

}  // namespace netsirs
