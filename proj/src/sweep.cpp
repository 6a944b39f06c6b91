#include "netsirs/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>
#include <variant>

#include "netsirs/equilibrium.hpp"
#include "netsirs/errors.hpp"
#include "netsirs/scenario.hpp"
#include "netsirs/spectral.hpp"
#include "netsirs/stability.hpp"

namespace netsirs {

unsigned resolve_thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("NETSIRS_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // ignored, fall through to hardware concurrency
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

SweepRow evaluate_row(const ModelInstance& base, double s, double tol) {
  SweepRow row;
  row.scale = s;
  try {
    const ModelInstance model = scale_interaction(base, s);
    row.r0 = reproduction_number(model).r0;
    row.dfe_abscissa = spectral_abscissa(jacobian_dfe(model));
    SolverOptions opts;
    opts.tol = tol;
    const EndemicResult result = solve_endemic(model, opts);
    if (const auto* eq = std::get_if<EndemicEquilibrium>(&result)) {
      row.endemic_norm = eq->y_star.lpNorm<Eigen::Infinity>();
      row.endemic_abscissa = spectral_abscissa(jacobian_endemic(model, eq->y_star, eq->z_star, 100.0 * tol));
    } else {
      row.endemic_norm = 0.0;
    }
  } catch (const Error&) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    row.r0 = row.endemic_norm = row.dfe_abscissa = nan;
    row.endemic_abscissa = nan;
    row.failed = true;
  }
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const ModelInstance& base, const SweepOptions& opts) {
  if (!(opts.scale_min > 0.0) || !(opts.scale_max > opts.scale_min) || opts.steps < 2) {
    throw Error(ErrorKind::InvalidConfig, "sweep needs 0 < scale_min < scale_max and steps >= 2");
  }
  const auto steps = static_cast<std::size_t>(opts.steps);
  std::vector<SweepRow> rows(steps);
  const double width = opts.scale_max - opts.scale_min;
  auto scale_at = [&](std::size_t k) {
    return k + 1 == steps ? opts.scale_max
                          : opts.scale_min + width * static_cast<double>(k) / static_cast<double>(steps - 1);
  };

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < steps; k = next++) rows[k] = evaluate_row(base, scale_at(k), opts.tol);
  };
  const unsigned threads = std::min<unsigned>(resolve_thread_count(opts.threads), static_cast<unsigned>(steps));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rows;
}

}  // namespace netsirs
