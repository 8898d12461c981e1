#include "infotherm/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace infotherm {

namespace {
constexpr double kPi = 3.14159265358979323846;

void sort_canonical(std::vector<double>& levels, std::vector<long>& degen) {
  std::vector<std::size_t> order(levels.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return levels[a] < levels[b]; });
  std::vector<double> l(levels.size());
  std::vector<long> g(levels.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    l[i] = levels[order[i]];
    g[i] = degen[order[i]];
  }
  levels = std::move(l);
  degen = std::move(g);
}
}  // namespace

SpectrumModel::SpectrumModel(std::vector<double> levels, std::vector<long> degeneracies)
    : levels_(std::move(levels)), degen_(std::move(degeneracies)) {
  if (levels_.empty()) throw std::domain_error("SpectrumModel: empty spectrum");
  if (degen_.empty()) degen_.assign(levels_.size(), 1);
  if (degen_.size() != levels_.size())
    throw std::invalid_argument("SpectrumModel: degeneracy count mismatch");
  for (double e : levels_)
    if (!std::isfinite(e)) throw std::invalid_argument("SpectrumModel: non-finite level");
  for (long g : degen_)
    if (g < 1) throw std::invalid_argument("SpectrumModel: degeneracy must be >= 1");
  sort_canonical(levels_, degen_);
}

SpectrumModel::SpectrumModel(std::vector<double> levels)
    : SpectrumModel(std::move(levels), std::vector<long>()) {}

SpectrumModel SpectrumModel::qubit(double gap) {
  return SpectrumModel({0.0, gap}, {1, 1});
}

SpectrumModel SpectrumModel::single_level(double energy) {
  return SpectrumModel({energy}, {1});
}

SpectrumModel SpectrumModel::harmonic_ladder(double omega, int n_max) {
  std::vector<double> l(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) l[static_cast<std::size_t>(n)] = n * omega;
  return SpectrumModel(std::move(l), std::vector<long>(static_cast<std::size_t>(n_max) + 1, 1));
}

SpectrumModel SpectrumModel::box_1d(double mass, double ell, int n_max) {
  if (mass <= 0.0 || ell <= 0.0) throw std::domain_error("box_1d: mass and length must be > 0");
  std::vector<double> l(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n)
    l[static_cast<std::size_t>(n - 1)] = kPi * kPi * n * n / (2.0 * mass * ell * ell);
  return SpectrumModel(std::move(l), std::vector<long>(static_cast<std::size_t>(n_max), 1));
}

long SpectrumModel::total_states() const {
  long n = 0;
  for (long g : degen_) n += g;
  return n;
}

double log_partition_function(const SpectrumModel& h, Beta beta) {
  const double e0 = h.ground_energy();
  if (beta.zero_temperature()) {
    // Z -> g0 exp(-beta e0); only meaningful through ratios or with e0 = 0
    return std::log(static_cast<double>(h.degeneracy(0))) - beta.value * e0;
  }
  double s = 0.0;
  for (std::size_t i = 0; i < h.num_levels(); ++i)
    s += static_cast<double>(h.degeneracy(i)) * std::exp(-beta.value * (h.level(i) - e0));
  return std::log(s) - beta.value * e0;
}

double partition_function(const SpectrumModel& h, Beta beta) {
  return std::exp(log_partition_function(h, beta));
}

double average_energy(const SpectrumModel& h, Beta beta) {
  if (beta.zero_temperature()) return h.ground_energy();
  const double e0 = h.ground_energy();
  double z = 0.0, num = 0.0;
  for (std::size_t i = 0; i < h.num_levels(); ++i) {
    const double w = static_cast<double>(h.degeneracy(i)) * std::exp(-beta.value * (h.level(i) - e0));
    z += w;
    num += w * h.level(i);
  }
  return num / z;
}

double thermal_entropy(const SpectrumModel& h, Beta beta) {
  if (beta.zero_temperature()) return std::log(static_cast<double>(h.degeneracy(0)));
  return beta.value * average_energy(h, beta) + log_partition_function(h, beta);
}

ProbDist gibbs_state(const SpectrumModel& h, Beta beta) {
  const double e0 = h.ground_energy();
  std::vector<double> w;
  w.reserve(static_cast<std::size_t>(h.total_states()));
  double z = 0.0;
  for (std::size_t i = 0; i < h.num_levels(); ++i)
    z += static_cast<double>(h.degeneracy(i)) * std::exp(-beta.value * (h.level(i) - e0));
  for (std::size_t i = 0; i < h.num_levels(); ++i) {
    const double p = std::exp(-beta.value * (h.level(i) - e0)) / z;
    for (long g = 0; g < h.degeneracy(i); ++g) w.push_back(p);
  }
  return ProbDist(std::move(w));
}

}  // namespace infotherm
