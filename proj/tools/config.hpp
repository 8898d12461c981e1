#ifndef INFOTHERM_TOOLS_CONFIG_HPP
#define INFOTHERM_TOOLS_CONFIG_HPP

#include <cstdint>
#include <json.hpp>
#include <map>
#include <string>
#include <vector>

namespace infotherm::cli {

enum class Experiment { erasure, jarzynski, szilard, bounds, feedback, gamble, reeb_wolf };
enum class OutputFormat { csv, json };

std::string to_string(Experiment e);
Experiment experiment_from_string(const std::string& s);

// Parsed and validated experiment configuration.  Parsing is strict: unknown
// keys anywhere are an error naming the key (silent typos kill sweeps).
struct ExperimentConfig {
  Experiment experiment = Experiment::szilard;
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0 = library default
  std::string output_path;  // empty = stdout
  OutputFormat format = OutputFormat::csv;
  nlohmann::json params;  // validated against the experiment schema
  std::map<std::string, std::vector<nlohmann::json>> grid;  // sweep axes

  nlohmann::json to_json() const;          // canonical (sorted keys)
  std::string canonical_dump() const;
  std::uint64_t config_hash() const;       // FNV-1a of the canonical dump
};

// throws std::invalid_argument with the offending key/experiment in the message
ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config_file(const std::string& path);

// schema lookup used by parse_config and the docs generator
struct ParamSpec {
  const char* key;
  const char* type;  // "int" | "number" | "string" | "number_list"
  bool required;
};
const std::vector<ParamSpec>& schema_for(Experiment e);

}  // namespace infotherm::cli

#endif
