#include "netsirs/scenario.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "netsirs/errors.hpp"
#include "netsirs/spectral.hpp"

namespace netsirs {

FullState sample_simplex_state(Rng& rng, Eigen::Index n, bool require_infected) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  FullState s{Vector(n), Vector(n), Vector(n)};
  do {
    for (Eigen::Index i = 0; i < n; ++i) {
      double u1 = unit(rng);
      double u2 = unit(rng);
      if (u2 < u1) std::swap(u1, u2);
      s.x(i) = u1;
      s.y(i) = u2 - u1;
      s.z(i) = 1.0 - u2;
    }
  } while (require_infected && n > 0 && !(s.y.maxCoeff() > 0.0));
  return s;
}

ModelInstance random_model(Rng& rng, Eigen::Index n, double target_r0, const RandomModelOptions& opts) {
  if (n < 1) throw Error(ErrorKind::DimensionMismatch, "random_model needs n >= 1");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> weight(opts.weight_min, opts.weight_max);

  Matrix W = Matrix::Zero(n, n);
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t k = 0; k < order.size(); ++k) {
    W(order[k], order[(k + 1) % order.size()]) = weight(rng);
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (W(i, j) > 0.0 || (i == j && !opts.allow_self_loops)) continue;
      if (unit(rng) < opts.edge_probability) W(i, j) = weight(rng);
    }
  }

  std::uniform_real_distribution<double> gamma_dist(opts.gamma_min, opts.gamma_max);
  std::uniform_real_distribution<double> delta_dist(opts.delta_min, opts.delta_max);
  Vector gamma(n), delta(n);
  for (Eigen::Index i = 0; i < n; ++i) gamma(i) = gamma_dist(rng);
  for (Eigen::Index i = 0; i < n; ++i) delta(i) = delta_dist(rng);

  return rescale_to_r0(validate_model(W, gamma, delta), target_r0);
}

ModelInstance scale_interaction(const ModelInstance& model, double s) {
  return validate_model(s * model.W(), model.gamma(), model.delta());
}

ModelInstance rescale_to_r0(const ModelInstance& model, double target_r0) {
  const double r0 = reproduction_number(model).r0;
  return scale_interaction(model, target_r0 / r0);
}

ModelInstance reference_five_node_model() {
  Matrix W(5, 5);
  W << 3.0000, 6.0000, 4.0000, 1.0000, 8.0000,  //
      0.1000, 0.4000, 1.0000, 0.0, 0.5000,      //
      2.0000, 1.4000, 2.8000, 2.0000, 1.4000,   //
      0.6000, 0.0, 0.0, 1.2000, 0.4000,         //
      2.8571, 0.0, 0.0, 0.7143, 1.2857;
  Vector delta(5);
  delta << 0.3, 0.4, 0.2, 0.1, 0.6;
  return validate_model(W, Vector::Ones(5), delta);
}

ModelInstance out_regular_model(Eigen::Index n, double row_sum, double gamma_bar, double delta_bar) {
  if (n < 2) throw Error(ErrorKind::DimensionMismatch, "out_regular_model needs n >= 2");
  Matrix W = Matrix::Constant(n, n, row_sum / static_cast<double>(n - 1));
  W.diagonal().setZero();
  return validate_model(W, Vector::Constant(n, gamma_bar), Vector::Constant(n, delta_bar));
}

}  // namespace netsirs
