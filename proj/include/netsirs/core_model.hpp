#pragma once

#include <Eigen/Dense>

namespace netsirs {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Absolute per-component slack for x + y + z = 1 on numeric states.
inline constexpr double kSimplexTol = 1e-9;

/// Recovery (gamma) and loss-of-immunity (delta) rates, one per node.
struct RateProfiles {
  Vector gamma;
  Vector delta;
};

/// A validated network SIRS model.
///
/// Holds the interaction matrix W together with the rate profiles and the
/// quantities every solver needs: the row-normalized matrix M = [gamma]^-1 W,
/// the ratio alpha = gamma / delta, and the cap ybar = 1 / (1 + alpha) of the
/// fixed-point box. Instances are immutable; construct through validate_model.
class ModelInstance {
 public:
  Eigen::Index size() const { return w_.rows(); }
  const Matrix& W() const { return w_; }
  const Vector& gamma() const { return rates_.gamma; }
  const Vector& delta() const { return rates_.delta; }
  const Matrix& M() const { return m_; }
  const Vector& alpha() const { return alpha_; }
  const Vector& ybar() const { return ybar_; }

 private:
  friend ModelInstance validate_model(const Matrix&, const Vector&, const Vector&);
  ModelInstance(Matrix w, RateProfiles rates);

  Matrix w_;
  RateProfiles rates_;
  Matrix m_;
  Vector alpha_;
  Vector ybar_;
};

struct FullState {
  Vector x;
  Vector y;
  Vector z;
};

struct ReducedState {
  Vector y;
  Vector z;
};

/// Checks dimensions, nonnegativity of W, positivity of the rates and
/// irreducibility of W. A 1x1 model is accepted only when W(0,0) > 0.
ModelInstance validate_model(const Matrix& W, const Vector& gamma, const Vector& delta);

/// True iff the support digraph of W (edge i->j iff W(i,j) > 0) is strongly
/// connected. A single node is one trivial component and returns true.
bool check_irreducible(const Matrix& W);

/// x = 1 - y - z. Throws OutOfSimplex when y_i + z_i > 1 + tol or a
/// component is negative beyond tol.
FullState full_from_reduced(const ReducedState& s, double tol = kSimplexTol);

/// Largest violation of x + y + z = 1 and of nonnegativity over all nodes.
double simplex_defect(const FullState& s);

}  // namespace netsirs
