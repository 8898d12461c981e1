#ifndef INFOTHERM_TOOLS_RUNNER_HPP
#define INFOTHERM_TOOLS_RUNNER_HPP

#include <string>

#include "config.hpp"

namespace infotherm::cli {

inline constexpr const char* kVersion = "infotherm 1.0.0";
inline constexpr std::size_t kMaxGridPoints = 1000000;

struct RunManifest {
  std::string config_hash;
  std::string version = kVersion;
  double duration_s = 0.0;
  std::size_t rows = 0;
  nlohmann::json summary;

  nlohmann::json to_json() const;
};

// Executes the experiment (single point or full grid) and writes results
// atomically; returns the manifest.  Throws on any error.
RunManifest execute(const ExperimentConfig& cfg);

}  // namespace infotherm::cli

#endif
