#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "netsirs/core_model.hpp"
#include "netsirs/dynamics.hpp"

namespace netsirs {

/// On-disk model description. W is stored as an array of n rows.
struct ModelFile {
  int n = 0;
  Matrix W;
  Vector gamma;
  Vector delta;
  std::optional<std::string> name;
};

ModelFile model_file_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ModelFile& f);

ModelFile model_file_from_instance(const ModelInstance& model, std::optional<std::string> name = {});

/// Parses and validates. Validation errors propagate unchanged.
ModelInstance load_model(const std::filesystem::path& path);
ModelInstance instance_from_file(const ModelFile& f);

void save_model(const std::filesystem::path& path, const ModelFile& f);

/// Initial conditions file: either {"y": [...], "z": [...]} or an array of
/// such objects. A missing "z" means z = 0.
std::vector<ReducedState> load_initial_states(const std::filesystem::path& path, Eigen::Index n);

/// Header "t,y_1..y_n,z_1..z_n,x_1..x_n[,V]".
std::string trajectory_csv_header(Eigen::Index n, bool with_lyapunov);

/// Numbers use 12 significant digits.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);
void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj);

/// `out.csv` with index k -> `out_k.csv`.
std::filesystem::path indexed_path(const std::filesystem::path& base, std::size_t k);

nlohmann::json vector_to_json(const Vector& v);
Vector vector_from_json(const nlohmann::json& j);

}  // namespace netsirs
