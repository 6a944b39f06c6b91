#pragma once

#include <optional>
#include <vector>

#include "netsirs/core_model.hpp"

namespace netsirs {

/// Violation threshold for recorded states; larger drift means dt is too big.
inline constexpr double kTrajectorySimplexTol = 1e-6;

struct IntegratorConfig {
  double dt = 0.01;
  double t_end = 100.0;
  int record_every = 1;
  bool lyapunov_trace = false;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<FullState> states;
  std::optional<std::vector<double>> lyapunov;
};

struct ReducedRate {
  Vector ydot;
  Vector zdot;
};

/// ydot = [1 - y - z] W y - [gamma] y,  zdot = [gamma] y - [delta] z
ReducedRate rhs(const Vector& y, const Vector& z, const ModelInstance& model);

/// ||rhs(y, z)||_inf
double residual(const ModelInstance& model, const Vector& y, const Vector& z);

/// Classical fixed-step RK4 on the reduced system. The state is never
/// projected back onto the simplex; a recorded state off the simplex by more
/// than kTrajectorySimplexTol raises SimplexViolation. The initial state is
/// always recorded, and so is the final one.
Trajectory simulate(const ModelInstance& model, const Vector& y0, const Vector& z0,
                    const IntegratorConfig& cfg);

}  // namespace netsirs
