#pragma once

#include <optional>
#include <vector>

#include "netsirs/core_model.hpp"

namespace netsirs {

struct SweepRow {
  double scale = 0.0;
  double r0 = 0.0;
  double endemic_norm = 0.0;  // ||y*(sW)||_inf, 0 when no endemic point
  double dfe_abscissa = 0.0;
  std::optional<double> endemic_abscissa;
  bool failed = false;
};

struct SweepOptions {
  double scale_min = 0.5;
  double scale_max = 2.0;
  int steps = 16;
  double tol = 1e-12;
  unsigned threads = 0;  // 0: NETSIRS_THREADS or hardware concurrency
};

/// Uniform grid s_k = scale_min + k (scale_max - scale_min)/(steps - 1).
/// Rows come back in ascending s regardless of worker scheduling; a failing
/// row has its numeric fields set to NaN and failed = true.
std::vector<SweepRow> run_sweep(const ModelInstance& base, const SweepOptions& opts);

/// Worker count: explicit request, else NETSIRS_THREADS, else hardware.
unsigned resolve_thread_count(unsigned requested);

}  // namespace netsirs
