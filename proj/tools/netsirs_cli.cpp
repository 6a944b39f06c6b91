// Command-line front end: r0, equilibrium, simulate, stability, sweep.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "netsirs/commands.hpp"

namespace cli = netsirs::cli;

int main(int argc, char** argv) {
  CLI::App app{"Network SIRS epidemic model toolkit"};
  app.require_subcommand(1);

  std::string model;
  double tol = 1e-12;
  std::string out_path;

  auto* r0 = app.add_subcommand("r0", "Basic reproduction number and Perron vectors");
  r0->add_option("--model", model, "Model JSON file")->required();

  auto* eq = app.add_subcommand("equilibrium", "Endemic equilibrium by monotone fixed-point iteration");
  eq->add_option("--model", model, "Model JSON file")->required();
  eq->add_option("--tol", tol, "Bracket tolerance");
  eq->add_option("--out", out_path, "Write a JSON report here");

  cli::SimulateArgs sim;
  std::string init_path;
  auto* simulate = app.add_subcommand("simulate", "Integrate trajectories with RK4 and write CSV files");
  simulate->add_option("--model", model, "Model JSON file")->required();
  auto* init_opt = simulate->add_option("--init", init_path, "Initial condition JSON file");
  auto* random_opt = simulate->add_option("--random", sim.random_count, "Number of random initial states");
  init_opt->excludes(random_opt);
  simulate->add_option("--seed", sim.seed, "Seed for random initial states");
  simulate->add_option("--t-end", sim.t_end, "Integration horizon");
  simulate->add_option("--dt", sim.dt, "RK4 step");
  simulate->add_option("--record-every", sim.record_every, "Store every k-th step");
  simulate->add_flag("--lyapunov", sim.lyapunov, "Append the Lyapunov value V as a column");
  simulate->add_option("--out", out_path, "CSV base path; files get an _<index> suffix")->required();

  unsigned long stab_seed = 0;
  auto* stab = app.add_subcommand("stability", "Stability report for both equilibria (JSON)");
  stab->add_option("--model", model, "Model JSON file")->required();
  stab->add_option("--tol", tol, "Equilibrium solver tolerance");
  stab->add_option("--seed", stab_seed, "Seed for the random Gershgorin samples");
  stab->add_option("--out", out_path, "Also write the JSON report here");

  cli::SweepArgs sweep;
  auto* sw = app.add_subcommand("sweep", "Bifurcation sweep over W -> sW (CSV)");
  sw->add_option("--model", model, "Model JSON file")->required();
  sw->add_option("--scale-min", sweep.scale_min)->required();
  sw->add_option("--scale-max", sweep.scale_max)->required();
  sw->add_option("--steps", sweep.steps)->required();
  sw->add_option("--tol", tol, "Equilibrium solver tolerance");
  sw->add_option("--out", out_path, "Output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kInputError;
  }

  const std::optional<std::filesystem::path> out =
      out_path.empty() ? std::nullopt : std::optional<std::filesystem::path>(out_path);

  if (r0->parsed()) return cli::cmd_r0(model, std::cout, std::cerr);
  if (eq->parsed()) return cli::cmd_equilibrium(model, tol, out, std::cout, std::cerr);
  if (simulate->parsed()) {
    sim.model_path = model;
    if (!init_path.empty()) sim.init_path = init_path;
    sim.out_csv = out_path;
    return cli::cmd_simulate(sim, std::cout, std::cerr);
  }
  if (stab->parsed()) return cli::cmd_stability(model, tol, out, stab_seed, std::cout, std::cerr);
  sweep.model_path = model;
  sweep.tol = tol;
  sweep.out_csv = out_path;
  return cli::cmd_sweep(sweep, std::cout, std::cerr);
}
