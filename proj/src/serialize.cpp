#include "infotherm/serialize.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace infotherm {

nlohmann::json to_json(const DensityMatrix& rho) {
  nlohmann::json j;
  j["dim"] = rho.dim();
  nlohmann::json entries = nlohmann::json::array();
  for (int r = 0; r < rho.dim(); ++r)
    for (int c = 0; c < rho.dim(); ++c) {
      const auto z = rho.matrix()(r, c);
      entries.push_back({z.real(), z.imag()});
    }
  j["entries"] = std::move(entries);
  return j;
}

DensityMatrix density_from_json(const nlohmann::json& j) {
  const int d = j.at("dim").get<int>();
  const auto& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != d * d)
    throw std::invalid_argument("density_from_json: entry count != dim^2");
  CMatrix m(d, d);
  int k = 0;
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c, ++k)
      m(r, c) = std::complex<double>(entries[k][0].get<double>(), entries[k][1].get<double>());
  return DensityMatrix(std::move(m));
}

nlohmann::json to_json(const Ledger& led, double beta) {
  return nlohmann::json{{"delta_s_system", led.delta_s_system},
                        {"delta_s_bath", led.delta_s_bath},
                        {"heat_to_bath", led.heat_to_bath},
                        {"mutual_info", led.mutual_info},
                        {"rel_entropy_bath", led.rel_entropy_bath},
                        {"entropy_production", led.entropy_production},
                        {"residual", led.equality_residual(beta)}};
}

void atomic_write_file(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("atomic_write_file: cannot open " + tmp);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      throw std::runtime_error("atomic_write_file: short write to " + tmp);
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("atomic_write_file: rename failed for " + path);
  }
}

std::string csv_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

// this code targets little-endian hosts; the format is pinned to LE on disk
template <typename T>
void put(std::string& out, T v) {
  const char* bytes = reinterpret_cast<const char*>(&v);
  out.append(bytes, sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw std::runtime_error("trajectory dump: truncated file");
  return v;
}

}  // namespace

void write_trajectory_binary(const std::string& path, const Trajectory& traj, double dt) {
  std::string payload;
  payload.reserve(20 + traj.positions.size() * sizeof(double));
  put<std::uint32_t>(payload, 1);  // dims
  put<double>(payload, dt);
  put<std::uint64_t>(payload, traj.positions.empty() ? 0 : traj.positions.size() - 1);
  for (const double x : traj.positions) put<double>(payload, x);
  atomic_write_file(path, payload);
}

Trajectory read_trajectory_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("trajectory dump: cannot open " + path);
  const auto dims = get<std::uint32_t>(in);
  if (dims != 1) throw std::runtime_error("trajectory dump: unsupported dims");
  const double dt = get<double>(in);
  const auto n_steps = get<std::uint64_t>(in);
  Trajectory traj;
  traj.positions.resize(n_steps + 1);
  traj.times.resize(n_steps + 1);
  for (std::uint64_t i = 0; i <= n_steps; ++i) {
    traj.positions[i] = get<double>(in);
    traj.times[i] = static_cast<double>(i) * dt;
  }
  return traj;
}

}  // namespace infotherm
