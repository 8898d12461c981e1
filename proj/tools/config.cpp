#include "config.hpp"

#include <algorithm>
#include <fstream>

namespace infotherm::cli {

namespace {

const std::map<std::string, Experiment> kNames = {
    {"erasure", Experiment::erasure},   {"jarzynski", Experiment::jarzynski},
    {"szilard", Experiment::szilard},   {"bounds", Experiment::bounds},
    {"feedback", Experiment::feedback}, {"gamble", Experiment::gamble},
    {"reeb_wolf", Experiment::reeb_wolf}};

void check_type(const std::string& key, const nlohmann::json& v, const std::string& type) {
  const bool ok = (type == "int" && v.is_number_integer()) ||
                  (type == "number" && v.is_number()) || (type == "string" && v.is_string()) ||
                  (type == "number_list" && v.is_array());
  if (!ok)
    throw std::invalid_argument("config: key '" + key + "' must have type " + type);
}

}  // namespace

std::string to_string(Experiment e) {
  for (const auto& [name, val] : kNames)
    if (val == e) return name;
  return "?";
}

Experiment experiment_from_string(const std::string& s) {
  const auto it = kNames.find(s);
  if (it == kNames.end())
    throw std::invalid_argument("config: unknown experiment '" + s +
                                "' (expected one of erasure, jarzynski, szilard, bounds, "
                                "feedback, gamble, reeb_wolf)");
  return it->second;
}

const std::vector<ParamSpec>& schema_for(Experiment e) {
  static const std::map<Experiment, std::vector<ParamSpec>> schemas = {
      {Experiment::szilard,
       {{"n_particles", "int", true},
        {"statistics", "string", true},
        {"wall_fraction", "number", true},
        {"beta_eps1", "number", true},
        {"n_max", "int", false}}},
      {Experiment::reeb_wolf,
       {{"trials", "int", true},
        {"bath", "string", true},
        {"beta_min", "number", false},
        {"beta_max", "number", false}}},
      {Experiment::erasure,
       {{"tau", "number", true},
        {"f_max", "number", true},
        {"n_traj", "int", true},
        {"dt", "number", false},
        {"trajectory_dump", "string", false}}},
      {Experiment::jarzynski,
       {{"k_start", "number", true},
        {"k_end", "number", true},
        {"tau", "number", true},
        {"n_traj", "int", true},
        {"dt", "number", false}}},
      {Experiment::bounds,
       {{"calculator", "string", true},
        {"a", "number", false},
        {"exponent", "number", false},
        {"reference_temperature", "number", false},
        {"delta_s", "number", false},
        {"tau", "number", false},
        {"beta", "number", false},
        {"alpha", "number", false},
        {"planckian", "int", false},
        {"d", "int", false},
        {"n", "int", false},
        {"eigenvalues", "number_list", false},
        {"n_copies", "int", false},
        {"epsilon", "number", false}}},
      {Experiment::feedback,
       {{"error_rates", "number_list", true},
        {"delta_f_y", "number", true},
        {"temperature", "number", true}}},
      {Experiment::gamble,
       {{"e_start", "number", true},
        {"e_end", "number", true},
        {"tau", "number", true},
        {"attempt_rate", "number", true},
        {"beta", "number", true},
        {"n_traj", "int", true},
        {"rule", "string", true},
        {"threshold", "number", false}}},
  };
  return schemas.at(e);
}

ExperimentConfig parse_config(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");
  static const std::vector<std::string> top_keys = {"experiment", "seed",   "threads",
                                                    "output",     "params", "grid"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::find(top_keys.begin(), top_keys.end(), key) == top_keys.end())
      throw std::invalid_argument("config: unknown top-level key '" + key + "'");
  }
  if (!j.contains("experiment"))
    throw std::invalid_argument("config: missing required key 'experiment'");

  ExperimentConfig cfg;
  cfg.experiment = experiment_from_string(j.at("experiment").get<std::string>());
  if (j.contains("seed")) {
    check_type("seed", j.at("seed"), "int");
    cfg.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("threads")) {
    check_type("threads", j.at("threads"), "int");
    cfg.threads = j.at("threads").get<unsigned>();
  }
  if (j.contains("output")) {
    const auto& out = j.at("output");
    if (!out.is_object()) throw std::invalid_argument("config: 'output' must be an object");
    for (const auto& [key, value] : out.items()) {
      (void)value;
      if (key != "path" && key != "format")
        throw std::invalid_argument("config: unknown output key '" + key + "'");
    }
    if (out.contains("path")) cfg.output_path = out.at("path").get<std::string>();
    if (out.contains("format")) {
      const std::string f = out.at("format").get<std::string>();
      if (f == "csv")
        cfg.format = OutputFormat::csv;
      else if (f == "json")
        cfg.format = OutputFormat::json;
      else
        throw std::invalid_argument("config: output format must be 'csv' or 'json'");
    }
  }

  const auto& schema = schema_for(cfg.experiment);
  cfg.params = nlohmann::json::object();
  if (j.contains("params")) {
    if (!j.at("params").is_object())
      throw std::invalid_argument("config: 'params' must be an object");
    for (const auto& [key, value] : j.at("params").items()) {
      const ParamSpec* spec = nullptr;
      for (const ParamSpec& s : schema)
        if (key == s.key) spec = &s;
      if (!spec)
        throw std::invalid_argument("config: unknown key '" + key + "' for experiment '" +
                                    to_string(cfg.experiment) + "'");
      check_type(key, value, spec->type);
      cfg.params[key] = value;
    }
  }
  for (const ParamSpec& s : schema)
    if (s.required && !cfg.params.contains(s.key) &&
        (!j.contains("grid") || !j.at("grid").contains(s.key)))
      throw std::invalid_argument("config: missing required key '" + std::string(s.key) +
                                  "' for experiment '" + to_string(cfg.experiment) + "'");

  if (j.contains("grid")) {
    if (!j.at("grid").is_object()) throw std::invalid_argument("config: 'grid' must be an object");
    for (const auto& [key, value] : j.at("grid").items()) {
      const ParamSpec* spec = nullptr;
      for (const ParamSpec& s : schema)
        if (key == s.key) spec = &s;
      if (!spec)
        throw std::invalid_argument("config: unknown grid key '" + key + "' for experiment '" +
                                    to_string(cfg.experiment) + "'");
      if (!value.is_array() || value.empty())
        throw std::invalid_argument("config: grid axis '" + key + "' must be a non-empty array");
      std::vector<nlohmann::json> axis;
      for (const auto& v : value) {
        check_type(key, v, spec->type);
        axis.push_back(v);
      }
      cfg.grid[key] = std::move(axis);
    }
  }
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("config: parse error in " + path + ": " + e.what());
  }
  return parse_config(j);
}

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json j;
  j["experiment"] = to_string(experiment);
  j["seed"] = seed;
  if (threads) j["threads"] = threads;
  if (!output_path.empty() || format != OutputFormat::csv) {
    nlohmann::json out;
    if (!output_path.empty()) out["path"] = output_path;
    out["format"] = format == OutputFormat::csv ? "csv" : "json";
    j["output"] = out;
  }
  j["params"] = params;
  if (!grid.empty()) {
    nlohmann::json g;
    for (const auto& [key, axis] : grid) g[key] = axis;
    j["grid"] = g;
  }
  return j;
}

std::string ExperimentConfig::canonical_dump() const { return to_json().dump(); }

std::uint64_t ExperimentConfig::config_hash() const {
  const std::string s = canonical_dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char ch : s) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace infotherm::cli
