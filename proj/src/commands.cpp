#include "netsirs/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "netsirs/dynamics.hpp"
#include "netsirs/equilibrium.hpp"
#include "netsirs/errors.hpp"
#include "netsirs/model_io.hpp"
#include "netsirs/scenario.hpp"
#include "netsirs/spectral.hpp"
#include "netsirs/stability.hpp"
#include "netsirs/sweep.hpp"

namespace netsirs::cli {

using nlohmann::json;

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string fmt_vector(const Vector& v, const char* spec = "%.10g") {
  std::string s = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += fmt(spec, v(i));
  }
  return s + "]";
}

int report(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  return is_input_error(e.kind()) ? kInputError : kNumericalError;
}

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

// Every failure path funnels through here so exit codes stay consistent.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return report(e, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

json gershgorin_json(const std::vector<GershgorinSample>& samples) {
  json arr = json::array();
  for (const auto& s : samples) {
    arr.push_back({{"lambda_re", s.lambda.real()},
                   {"lambda_im", s.lambda.imag()},
                   {"all_disks_left", s.all_disks_left},
                   {"min_margin", s.min_margin}});
  }
  return arr;
}

}  // namespace

int cmd_r0(const std::filesystem::path& model_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ModelInstance model = load_model(model_path);
    const ReproductionNumber rn = reproduction_number(model);
    out << "R0 = " << fmt("%#.6g", rn.r0) << '\n';
    out << "right Perron vector = " << fmt_vector(rn.spectral.v_right) << '\n';
    out << "left Perron vector = " << fmt_vector(rn.spectral.v_left) << '\n';
    out << "iterations = " << rn.spectral.iterations << '\n';
    out << "residual = " << fmt("%.3e", rn.spectral.residual) << '\n';
    return static_cast<int>(kOk);
  });
}

int cmd_equilibrium(const std::filesystem::path& model_path, double tol,
                    const std::optional<std::filesystem::path>& json_out, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!(tol > 0.0)) throw Error(ErrorKind::InvalidConfig, "--tol must be positive");
    const ModelInstance model = load_model(model_path);
    SolverOptions opts;
    opts.tol = tol;
    const EndemicResult result = solve_endemic(model, opts);
    json j;
    if (const auto* none = std::get_if<NoEndemic>(&result)) {
      out << "NoEndemic (R0 = " << fmt("%f", none->r0) << ")";
      if (none->near_threshold) out << " NearThreshold";
      out << '\n';
      j = {{"endemic", false}, {"r0", none->r0}, {"near_threshold", none->near_threshold}};
    } else {
      const auto& eq = std::get<EndemicEquilibrium>(result);
      const double ode_residual = residual(model, eq.y_star, eq.z_star);
      out << "R0 = " << fmt("%f", eq.r0) << '\n';
      out << "y* = " << fmt_vector(eq.y_star) << '\n';
      out << "z* = " << fmt_vector(eq.z_star) << '\n';
      out << "x* = " << fmt_vector(eq.x_star) << '\n';
      out << "fixed-point residual = " << fmt("%.3e", eq.residual) << '\n';
      out << "ODE residual = " << fmt("%.3e", ode_residual) << '\n';
      out << "bracket gap = " << fmt("%.3e", eq.bracket_gap) << '\n';
      out << "iterations = " << eq.iterations << '\n';
      j = {{"endemic", true},
           {"r0", eq.r0},
           {"y_star", vector_to_json(eq.y_star)},
           {"z_star", vector_to_json(eq.z_star)},
           {"x_star", vector_to_json(eq.x_star)},
           {"residual", eq.residual},
           {"ode_residual", ode_residual},
           {"bracket_gap", eq.bracket_gap},
           {"iterations", eq.iterations}};
    }
    if (json_out) write_json(*json_out, j);
    return static_cast<int>(kOk);
  });
}

int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ModelInstance model = load_model(args.model_path);
    const Eigen::Index n = model.size();
    std::vector<ReducedState> starts;
    if (args.init_path) {
      starts = load_initial_states(*args.init_path, n);
    } else if (args.random_count > 0) {
      Rng rng(args.seed);
      for (int k = 0; k < args.random_count; ++k) {
        FullState s = sample_simplex_state(rng, n, true);
        starts.push_back({s.y, s.z});
      }
    } else {
      throw Error(ErrorKind::InvalidConfig, "simulate needs --init or --random");
    }

    IntegratorConfig cfg;
    cfg.dt = args.dt;
    cfg.t_end = args.t_end;
    cfg.record_every = args.record_every;
    cfg.lyapunov_trace = args.lyapunov;
    for (std::size_t k = 0; k < starts.size(); ++k) {
      const Trajectory traj = simulate(model, starts[k].y, starts[k].z, cfg);
      const auto path = indexed_path(args.out_csv, k);
      write_trajectory_csv(path, traj);
      out << path.string() << '\n';
    }
    return static_cast<int>(kOk);
  });
}

int cmd_stability(const std::filesystem::path& model_path, double tol,
                  const std::optional<std::filesystem::path>& json_out, unsigned long seed, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    if (!(tol > 0.0)) throw Error(ErrorKind::InvalidConfig, "--tol must be positive");
    const ModelInstance model = load_model(model_path);
    const ReproductionNumber rn = reproduction_number(model);
    const DfeAssessment dfe = assess_dfe(model, rn.r0);
    json j;
    j["r0"] = rn.r0;
    j["dfe"] = {{"abscissa", dfe.abscissa}, {"verdict", std::string(to_string(dfe.verdict))}};

    SolverOptions opts;
    opts.tol = tol;
    const EndemicResult result = solve_endemic(model, opts);
    if (const auto* eq = std::get_if<EndemicEquilibrium>(&result)) {
      const double eta = eta_bound(model, eq->y_star);
      const StabilityCertificate cert =
          certify_endemic(model, eq->y_star, eq->z_star, default_lambda_samples(eta, seed), 100.0 * tol);
      j["endemic"] = {{"y_star", vector_to_json(eq->y_star)},
                      {"z_star", vector_to_json(eq->z_star)},
                      {"x_star", vector_to_json(eq->x_star)},
                      {"eta", cert.eta},
                      {"m_star", cert.m_star},
                      {"spectral_abscissa", cert.spectral_abscissa},
                      {"gershgorin", gershgorin_json(cert.gershgorin_samples)},
                      {"verdict", std::string(to_string(cert.verdict))}};
    }
    const std::string text = j.dump(2);
    out << text << '\n';
    if (json_out) write_json(*json_out, j);
    return static_cast<int>(kOk);
  });
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ModelInstance model = load_model(args.model_path);
    SweepOptions opts;
    opts.scale_min = args.scale_min;
    opts.scale_max = args.scale_max;
    opts.steps = args.steps;
    opts.tol = args.tol;
    const std::vector<SweepRow> rows = run_sweep(model, opts);

    std::ofstream csv(args.out_csv);
    if (!csv) throw Error(ErrorKind::ParseError, "cannot write " + args.out_csv.string());
    csv << "scale,r0,endemic_norm,dfe_abscissa,endemic_abscissa\n";
    int failures = 0;
    for (const SweepRow& r : rows) {
      failures += r.failed ? 1 : 0;
      csv << fmt("%.12g", r.scale) << ',' << fmt("%.12g", r.r0) << ',' << fmt("%.12g", r.endemic_norm) << ','
          << fmt("%.12g", r.dfe_abscissa) << ',';
      if (r.endemic_abscissa) csv << fmt("%.12g", *r.endemic_abscissa);
      csv << '\n';
    }
    out << args.out_csv.string() << ": " << rows.size() << " rows\n";
    if (failures > 0) err << "warning: " << failures << " sweep rows failed (NaN fields)\n";
    return static_cast<int>(kOk);
  });
}

}  // namespace netsirs::cli
