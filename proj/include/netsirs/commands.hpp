#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

namespace netsirs::cli {

/// Process exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kInputError = 1, kNumericalError = 2 };

int cmd_r0(const std::filesystem::path& model_path, std::ostream& out, std::ostream& err);

int cmd_equilibrium(const std::filesystem::path& model_path, double tol,
                    const std::optional<std::filesystem::path>& json_out, std::ostream& out, std::ostream& err);

struct SimulateArgs {
  std::filesystem::path model_path;
  std::optional<std::filesystem::path> init_path;
  int random_count = 0;
  unsigned long seed = 0;
  double t_end = 100.0;
  double dt = 0.01;
  int record_every = 1;
  bool lyapunov = false;
  std::filesystem::path out_csv;
};

int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err);

int cmd_stability(const std::filesystem::path& model_path, double tol,
                  const std::optional<std::filesystem::path>& json_out, unsigned long seed, std::ostream& out,
                  std::ostream& err);

struct SweepArgs {
  std::filesystem::path model_path;
  double scale_min = 0.5;
  double scale_max = 2.0;
  int steps = 16;
  double tol = 1e-12;
  std::filesystem::path out_csv;
};

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err);

}  // namespace netsirs::cli
