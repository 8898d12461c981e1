#ifndef INFOTHERM_SPECTRUM_HPP
#define INFOTHERM_SPECTRUM_HPP

#include <vector>

#include "infotherm/common.hpp"
#include "infotherm/prob.hpp"

namespace infotherm {

// Discrete energy spectrum with explicit degeneracy counts (kept separate
// from repeated levels so Z stays exact for large degeneracies).  Canonical
// form: levels sorted ascending.
class SpectrumModel {
 public:
  SpectrumModel(std::vector<double> levels, std::vector<long> degeneracies);
  explicit SpectrumModel(std::vector<double> levels);

  static SpectrumModel qubit(double gap);                        // {0, gap}
  static SpectrumModel single_level(double energy);
  static SpectrumModel harmonic_ladder(double omega, int n_max); // n*omega, n = 0..n_max
  // particle in a 1D box of length ell: eps_n = pi^2 n^2 / (2 m ell^2), n = 1..n_max
  static SpectrumModel box_1d(double mass, double ell, int n_max);

  std::size_t num_levels() const { return levels_.size(); }
  double level(std::size_t i) const { return levels_[i]; }
  long degeneracy(std::size_t i) const { return degen_[i]; }
  double ground_energy() const { return levels_.front(); }
  long total_states() const;

 private:
  std::vector<double> levels_;
  std::vector<long> degen_;
};

// ln Z = ln sum_n g_n exp(-beta eps_n), evaluated with a ground-state shift so
// it never overflows.  Z itself may underflow for large beta*eps_0; prefer the
// log form in ratios.
double log_partition_function(const SpectrumModel& h, Beta beta);
double partition_function(const SpectrumModel& h, Beta beta);

// <E> = sum g eps e^{-beta eps} / Z; matches -d(ln Z)/d(beta)
double average_energy(const SpectrumModel& h, Beta beta);

// S = beta <E> + ln Z; beta = +inf returns ln(ground degeneracy)
double thermal_entropy(const SpectrumModel& h, Beta beta);

// Per-state Gibbs populations, degeneracies expanded so that
// shannon_entropy(gibbs_state(h, beta)) == thermal_entropy(h, beta).
ProbDist gibbs_state(const SpectrumModel& h, Beta beta);

}  // namespace infotherm

#endif
