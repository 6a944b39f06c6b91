#pragma once

#include <random>

#include "netsirs/core_model.hpp"

namespace netsirs {

using Rng = std::mt19937_64;

/// Uniform point on the per-node 2-simplex from two sorted uniforms
/// u1 <= u2: (x, y, z) = (u1, u2 - u1, 1 - u2). With require_infected, the
/// draw is repeated until some y_i > 0.
FullState sample_simplex_state(Rng& rng, Eigen::Index n, bool require_infected = true);

struct RandomModelOptions {
  double edge_probability = 0.5;
  double weight_min = 0.1;
  double weight_max = 2.0;
  double gamma_min = 0.2;
  double gamma_max = 2.0;
  double delta_min = 0.1;
  double delta_max = 1.5;
  bool allow_self_loops = true;
};

/// Random irreducible model: a random Hamiltonian cycle keeps the support
/// strongly connected, extra edges are added with edge_probability. W is then
/// rescaled so that R0 equals target_r0.
ModelInstance random_model(Rng& rng, Eigen::Index n, double target_r0, const RandomModelOptions& opts = {});

/// Same model with W multiplied by s.
ModelInstance scale_interaction(const ModelInstance& model, double s);

/// Same model with W rescaled so that R0 equals target_r0.
ModelInstance rescale_to_r0(const ModelInstance& model, double target_r0);

/// The five-node network used for the published simulation study: unit
/// recovery rates, W equal to the printed normalized matrix.
ModelInstance reference_five_node_model();

/// Out-regular model: n nodes, W all ones off the diagonal scaled so every
/// row sums to row_sum, homogeneous rates.
ModelInstance out_regular_model(Eigen::Index n, double row_sum, double gamma_bar, double delta_bar);

}  // namespace netsirs
