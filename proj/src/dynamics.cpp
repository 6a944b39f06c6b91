#include "netsirs/dynamics.hpp"

#include <cmath>
#include <sstream>

#include "netsirs/errors.hpp"
#include "netsirs/spectral.hpp"
#include "netsirs/stability.hpp"

namespace netsirs {

ReducedRate rhs(const Vector& y, const Vector& z, const ModelInstance& model) {
  const Vector force = model.W() * y;
  ReducedRate r;
  r.ydot = (1.0 - y.array() - z.array()) * force.array() - model.gamma().array() * y.array();
  r.zdot = model.gamma().array() * y.array() - model.delta().array() * z.array();
  return r;
}

double residual(const ModelInstance& model, const Vector& y, const Vector& z) {
  const ReducedRate r = rhs(y, z, model);
  if (r.ydot.size() == 0) return 0.0;
  return std::max(r.ydot.lpNorm<Eigen::Infinity>(), r.zdot.lpNorm<Eigen::Infinity>());
}

namespace {

void check_config(const IntegratorConfig& cfg) {
  if (!(cfg.dt > 0.0) || !(cfg.t_end >= cfg.dt) || cfg.record_every < 1 || !std::isfinite(cfg.t_end)) {
    std::ostringstream msg;
    msg << "dt = " << cfg.dt << ", t_end = " << cfg.t_end << ", record_every = " << cfg.record_every;
    throw Error(ErrorKind::InvalidConfig, msg.str());
  }
}

}  // namespace

Trajectory simulate(const ModelInstance& model, const Vector& y0, const Vector& z0, const IntegratorConfig& cfg) {
  check_config(cfg);
  const Eigen::Index n = model.size();
  if (y0.size() != n || z0.size() != n) {
    throw Error(ErrorKind::InvalidInitial, "initial state length does not match the model");
  }
  try {
    full_from_reduced({y0, z0});
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidInitial, e.what());
  }

  std::optional<SpectralResult> spectral;
  if (cfg.lyapunov_trace) spectral = reproduction_number(model).spectral;

  Trajectory traj;
  if (spectral) traj.lyapunov.emplace();
  auto record = [&](double t, const Vector& y, const Vector& z) {
    FullState s{Vector::Ones(n) - y - z, y, z};
    if (simplex_defect(s) > kTrajectorySimplexTol) {
      std::ostringstream msg;
      msg << "state left the simplex at t = " << t << " (defect " << simplex_defect(s) << ")";
      throw Error(ErrorKind::SimplexViolation, msg.str());
    }
    traj.times.push_back(t);
    if (spectral) traj.lyapunov->push_back(lyapunov_value(model, spectral->v_left, y));
    traj.states.push_back(std::move(s));
  };

  const long steps = std::lround(cfg.t_end / cfg.dt);
  Vector y = y0;
  Vector z = z0;
  record(0.0, y, z);
  const double h = cfg.dt;
  for (long k = 1; k <= steps; ++k) {
    const ReducedRate k1 = rhs(y, z, model);
    const ReducedRate k2 = rhs(y + 0.5 * h * k1.ydot, z + 0.5 * h * k1.zdot, model);
    const ReducedRate k3 = rhs(y + 0.5 * h * k2.ydot, z + 0.5 * h * k2.zdot, model);
    const ReducedRate k4 = rhs(y + h * k3.ydot, z + h * k3.zdot, model);
    y += (h / 6.0) * (k1.ydot + 2.0 * k2.ydot + 2.0 * k3.ydot + k4.ydot);
    z += (h / 6.0) * (k1.zdot + 2.0 * k2.zdot + 2.0 * k3.zdot + k4.zdot);
    if (k % cfg.record_every == 0 || k == steps) record(static_cast<double>(k) * h, y, z);
  }
  return traj;
}

}  // namespace netsirs
