#include <doctest.h>

#include <cmath>
#include <variant>

#include "netsirs/dynamics.hpp"
#include "netsirs/equilibrium.hpp"
#include "netsirs/errors.hpp"
#include "netsirs/scenario.hpp"
#include "test_helpers.hpp"

using namespace netsirs;

TEST_CASE("rhs by hand") {
  const ModelInstance one = validate_model(Matrix::Constant(1, 1, 2.0), vec({1}), vec({1}));
  const ReducedRate r = rhs(vec({0.5}), vec({0.0}), one);
  CHECK(r.ydot(0) == 0.0);
  CHECK(r.zdot(0) == 0.5);

  const ModelInstance m = reference_five_node_model();
  const ReducedRate zero = rhs(Vector::Zero(5), Vector::Zero(5), m);
  CHECK(zero.ydot == Vector::Zero(5));
  CHECK(zero.zdot == Vector::Zero(5));
}

TEST_CASE("residual") {
  const ModelInstance m = out_regular_model(3, 2.0, 1.0, 1.0);
  CHECK(residual(m, Vector::Zero(3), Vector::Zero(3)) == 0.0);
  // y = ybar = 0.5, z = 0: ydot = (1 - 0.5) * 1 - 0.5 = 0, zdot = 0.5.
  CHECK(residual(m, m.ybar(), Vector::Zero(3)) == 0.5);
  const auto eq = std::get<EndemicEquilibrium>(solve_endemic(m));
  CHECK(residual(m, eq.y_star, eq.z_star) <= 1e-11);
}

TEST_CASE("no infection stays at zero and immunity wanes") {
  const ModelInstance m = reference_five_node_model();
  const Vector z0 = vec({0.3, 0.1, 0.9, 0.5, 0.0});
  IntegratorConfig cfg;
  cfg.dt = 0.05;
  cfg.t_end = 50.0;
  const Trajectory t = simulate(m, Vector::Zero(5), z0, cfg);
  for (const FullState& s : t.states) CHECK(s.y == Vector::Zero(5));
  const Vector expected = z0.cwiseProduct((-m.delta() * 50.0).array().exp().matrix());
  CHECK(sup(t.states.back().z - expected) <= 1e-9);
}

TEST_CASE("subcritical trajectory approaches the disease-free state") {
  const ModelInstance m = rescale_to_r0(reference_five_node_model(), 0.9);
  Rng rng(17);
  IntegratorConfig cfg;
  cfg.t_end = 200.0;
  cfg.record_every = 100;
  const FullState s0 = sample_simplex_state(rng, 5);
  const Trajectory t = simulate(m, s0.y, s0.z, cfg);
  const FullState& end = t.states.back();
  CHECK(sup(end.x - Vector::Ones(5)) <= 1e-4);
  CHECK(sup(end.y) <= 1e-4);
  CHECK(sup(end.z) <= 1e-4);
}

TEST_CASE("simplex conservation and positivity") {
  Rng rng(3);
  std::uniform_real_distribution<double> r0(0.5, 6.0);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index n = 2 + trial % 3;
    const ModelInstance m = random_model(rng, n, r0(rng));
    FullState s0 = sample_simplex_state(rng, n);
    // Infect a single node only.
    const Eigen::Index seed_node = trial % n;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i != seed_node) {
        s0.x(i) += s0.y(i);
        s0.y(i) = 0.0;
      }
    }
    IntegratorConfig cfg;
    cfg.dt = 0.01;
    cfg.t_end = 20.0;
    const Trajectory t = simulate(m, s0.y, s0.z, cfg);
    for (std::size_t k = 0; k < t.states.size(); ++k) {
      const FullState& s = t.states[k];
      REQUIRE((s.x + s.y + s.z - Vector::Ones(n)).lpNorm<Eigen::Infinity>() <= kSimplexTol);
      if (k > 0) REQUIRE(s.y.minCoeff() > 0.0);
    }
    for (std::size_t k = 1; k < t.times.size(); ++k) CHECK(t.times[k] > t.times[k - 1]);
  }
}

TEST_CASE("record_every keeps the first and last state") {
  const ModelInstance m = out_regular_model(3, 2.0, 1.0, 1.0);
  IntegratorConfig cfg;
  cfg.dt = 0.1;
  cfg.t_end = 1.05;  // 11 steps after rounding
  cfg.record_every = 4;
  const Trajectory t = simulate(m, Vector::Constant(3, 0.1), Vector::Zero(3), cfg);
  REQUIRE(t.times.size() == 4);  // 0, 4, 8, 11
  CHECK(t.times.front() == 0.0);
  CHECK(t.times.back() == doctest::Approx(1.1));
}

TEST_CASE("RK4 is fourth order") {
  const ModelInstance m = out_regular_model(3, 2.0, 1.0, 1.0);
  const Vector y0 = vec({0.3, 0.05, 0.01});
  const Vector z0 = vec({0.1, 0.2, 0.0});
  auto end_state = [&](double dt) {
    IntegratorConfig cfg;
    cfg.dt = dt;
    cfg.t_end = 10.0;
    cfg.record_every = 1000000;
    const FullState s = simulate(m, y0, z0, cfg).states.back();
    Vector u(6);
    u << s.y, s.z;
    return u;
  };
  const double dt = 0.2;
  const Vector ref = end_state(dt / 8.0);
  const double e1 = sup(end_state(dt) - ref);
  const double e2 = sup(end_state(dt / 2.0) - ref);
  CHECK(e2 > 1e-13);
  CHECK(e1 / e2 >= 12.0);
  CHECK(e1 / e2 <= 20.0);
}

TEST_CASE("Lyapunov trace is nonincreasing below threshold") {
  const ModelInstance m = rescale_to_r0(reference_five_node_model(), 0.8);
  Rng rng(9);
  IntegratorConfig cfg;
  cfg.t_end = 50.0;
  cfg.lyapunov_trace = true;
  const FullState s0 = sample_simplex_state(rng, 5);
  const Trajectory t = simulate(m, s0.y, s0.z, cfg);
  REQUIRE(t.lyapunov);
  REQUIRE(t.lyapunov->size() == t.states.size());
  for (std::size_t k = 1; k < t.lyapunov->size(); ++k) CHECK((*t.lyapunov)[k] <= (*t.lyapunov)[k - 1] + 1e-9);
}

TEST_CASE("simulate errors") {
  const ModelInstance m = reference_five_node_model();
  IntegratorConfig cfg;
  auto kind = [&](const Vector& y, const Vector& z, const IntegratorConfig& c) {
    try {
      simulate(m, y, z, c);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::ParseError;
  };
  CHECK(kind(Vector::Constant(5, 0.7), Vector::Constant(5, 0.7), cfg) == ErrorKind::InvalidInitial);
  CHECK(kind(Vector::Constant(4, 0.1), Vector::Zero(4), cfg) == ErrorKind::InvalidInitial);

  IntegratorConfig bad = cfg;
  bad.dt = -1.0;
  CHECK(kind(Vector::Constant(5, 0.1), Vector::Zero(5), bad) == ErrorKind::InvalidConfig);

  IntegratorConfig coarse;
  coarse.dt = 1.0;
  coarse.t_end = 50.0;
  CHECK(kind(Vector::Constant(5, 0.1), Vector::Zero(5), coarse) == ErrorKind::SimplexViolation);
}
