#include "netsirs/model_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "netsirs/errors.hpp"

namespace netsirs {

using nlohmann::json;

nlohmann::json vector_to_json(const Vector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

Vector vector_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "expected an array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw Error(ErrorKind::ParseError, "expected an array of numbers");
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

ModelFile model_file_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "model file must be a JSON object");
  for (const char* key : {"n", "W", "gamma", "delta"}) {
    if (!j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
  }
  if (!j["n"].is_number_integer()) throw Error(ErrorKind::ParseError, "\"n\" must be an integer");

  ModelFile f;
  f.n = j["n"].get<int>();
  if (f.n < 1) throw Error(ErrorKind::DimensionMismatch, "n = " + std::to_string(f.n));
  const auto n = static_cast<Eigen::Index>(f.n);

  const json& w = j["W"];
  if (!w.is_array()) throw Error(ErrorKind::ParseError, "\"W\" must be an array");
  f.W.resize(n, n);
  if (!w.empty() && w[0].is_array()) {
    if (static_cast<Eigen::Index>(w.size()) != n) {
      throw Error(ErrorKind::DimensionMismatch, "W has " + std::to_string(w.size()) + " rows, n = " +
                                                    std::to_string(f.n));
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      const Vector row = vector_from_json(w[static_cast<std::size_t>(i)]);
      if (row.size() != n) {
        throw Error(ErrorKind::DimensionMismatch, "row " + std::to_string(i) + " of W has " +
                                                      std::to_string(row.size()) + " entries");
      }
      f.W.row(i) = row.transpose();
    }
  } else {
    // Flat row-major layout.
    const Vector flat = vector_from_json(w);
    if (flat.size() != n * n) {
      throw Error(ErrorKind::DimensionMismatch, "flat W has " + std::to_string(flat.size()) + " entries");
    }
    for (Eigen::Index i = 0; i < n; ++i) f.W.row(i) = flat.segment(i * n, n).transpose();
  }
  f.gamma = vector_from_json(j["gamma"]);
  f.delta = vector_from_json(j["delta"]);
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw Error(ErrorKind::ParseError, "\"name\" must be a string");
    f.name = j["name"].get<std::string>();
  }
  return f;
}

nlohmann::json to_json(const ModelFile& f) {
  json j;
  if (f.name) j["name"] = *f.name;
  j["n"] = f.n;
  json rows = json::array();
  for (Eigen::Index i = 0; i < f.W.rows(); ++i) rows.push_back(vector_to_json(f.W.row(i).transpose()));
  j["W"] = rows;
  j["gamma"] = vector_to_json(f.gamma);
  j["delta"] = vector_to_json(f.delta);
  return j;
}

ModelFile model_file_from_instance(const ModelInstance& model, std::optional<std::string> name) {
  return ModelFile{static_cast<int>(model.size()), model.W(), model.gamma(), model.delta(), std::move(name)};
}

ModelInstance instance_from_file(const ModelFile& f) { return validate_model(f.W, f.gamma, f.delta); }

namespace {

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
}

}  // namespace

ModelInstance load_model(const std::filesystem::path& path) {
  return instance_from_file(model_file_from_json(read_json(path)));
}

void save_model(const std::filesystem::path& path, const ModelFile& f) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  out << to_json(f).dump(2) << '\n';
}

std::vector<ReducedState> load_initial_states(const std::filesystem::path& path, Eigen::Index n) {
  const json j = read_json(path);
  auto parse_one = [n](const json& item) {
    if (!item.is_object() || !item.contains("y")) {
      throw Error(ErrorKind::ParseError, "initial state needs a \"y\" array");
    }
    ReducedState s;
    s.y = vector_from_json(item["y"]);
    s.z = item.contains("z") ? vector_from_json(item["z"]) : Vector::Zero(n);
    if (s.y.size() != n || s.z.size() != n) {
      throw Error(ErrorKind::DimensionMismatch, "initial state length differs from n = " + std::to_string(n));
    }
    return s;
  };
  std::vector<ReducedState> out;
  if (j.is_array()) {
    for (const json& item : j) out.push_back(parse_one(item));
  } else {
    out.push_back(parse_one(j));
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, "no initial states in " + path.string());
  return out;
}

std::string trajectory_csv_header(Eigen::Index n, bool with_lyapunov) {
  std::string h = "t";
  for (const char* prefix : {"y_", "z_", "x_"}) {
    for (Eigen::Index i = 1; i <= n; ++i) h += "," + std::string(prefix) + std::to_string(i);
  }
  if (with_lyapunov) h += ",V";
  return h;
}

namespace {

void put_number(std::string& line, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  line += buf;
}

}  // namespace

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  const Eigen::Index n = traj.states.empty() ? 0 : traj.states.front().y.size();
  const bool with_v = traj.lyapunov.has_value();
  out << trajectory_csv_header(n, with_v) << '\n';
  std::string line;
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    line.clear();
    put_number(line, traj.times[k]);
    const FullState& s = traj.states[k];
    for (const Vector* v : {&s.y, &s.z, &s.x}) {
      for (Eigen::Index i = 0; i < n; ++i) {
        line += ',';
        put_number(line, (*v)(i));
      }
    }
    if (with_v) {
      line += ',';
      put_number(line, (*traj.lyapunov)[k]);
    }
    line += '\n';
    out << line;
  }
}

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  write_trajectory_csv(out, traj);
}

std::filesystem::path indexed_path(const std::filesystem::path& base, std::size_t k) {
  std::filesystem::path p = base;
  const std::string ext = base.has_extension() ? base.extension().string() : std::string(".csv");
  p.replace_filename(base.stem().string() + "_" + std::to_string(k) + ext);
  return p;
}

}  // namespace netsirs
