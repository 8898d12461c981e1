#ifndef INFOTHERM_SERIALIZE_HPP
#define INFOTHERM_SERIALIZE_HPP

#include <json.hpp>
#include <string>

#include "infotherm/density.hpp"
#include "infotherm/landauer.hpp"
#include "infotherm/langevin.hpp"

namespace infotherm {

// DensityMatrix wire schema: {"dim": d, "entries": [[re, im], ...]} row-major.
nlohmann::json to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Ledger& ledger, double beta);

// atomic file write: temp file in the same directory, then rename
void atomic_write_file(const std::string& path, const std::string& contents);

// Raw trajectory dump, little-endian binary:
//   u32 dims (=1), f64 dt, u64 n_steps, then (n_steps+1) positions as f64.
void write_trajectory_binary(const std::string& path, const Trajectory& traj, double dt);
Trajectory read_trajectory_binary(const std::string& path);

// CSV numeric formatting: '.' decimal, 17 significant digits
std::string csv_double(double v);

}  // namespace infotherm

#endif
