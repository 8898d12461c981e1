#ifndef INFOTHERM_SZILARD_HPP
#define INFOTHERM_SZILARD_HPP

#include <vector>

#include "infotherm/common.hpp"
#include "infotherm/prob.hpp"
#include "infotherm/spectrum.hpp"

namespace infotherm {

enum class Statistics { boltzmann, boson, fermion };

// N particles in a 1D box of length L (natural units); particle spin ignored.
// N is capped at 3: sector partition functions are evaluated by exact
// enumeration of (anti)symmetrised occupations, which is only practical for
// the few-particle cases the analysis targets.
struct BoxSpec {
  double length = 1.0;
  double mass = 0.5;
  int n_particles = 1;
  Statistics statistics = Statistics::boltzmann;
  int n_max = 200;  // single-particle cutoff; tail is asserted per evaluation

  BoxSpec(double l, double m, int n, Statistics stat, int cutoff = 200);
  double eps1() const;  // ground level of the full box
};

struct WallConfig {
  double position;
  explicit WallConfig(double l_over_0_L, const BoxSpec& box);
};

// single-particle levels of a segment of length ell
SpectrumModel box_levels(const BoxSpec& box, double segment_length);

// ln of the k-particle canonical partition function of one segment under the
// box statistics (k <= 3), with the segment mean energy; exact enumeration,
// evaluated relative to the minimal configuration so large beta stays finite
struct SegmentEnsemble {
  double log_z = 0.0;       // k = 0 gives log_z = 0 by convention
  double mean_energy = 0.0;
};
SegmentEnsemble segment_ensemble(const BoxSpec& box, double ell, int k, Beta beta);

// ln Z_m(l) = ln Z_m(segment l) + ln Z_{N-m}(segment L-l)
double log_sector_partition(const BoxSpec& box, const WallConfig& wall, int m_left, Beta beta);
double sector_partition(const BoxSpec& box, const WallConfig& wall, int m_left, Beta beta);

// p_m = Z_m(l) / sum_m Z_m(l)
ProbDist measurement_probs(const BoxSpec& box, const WallConfig& wall, Beta beta);

// Equilibrium wall position for measured occupation m: root of d ln Z_m/dl
// (force balance).  m = 0 or N sends the wall to the box end instead.
struct WallEquilibrium {
  double position = 0.0;
  bool at_boundary = false;
};
WallEquilibrium equilibrium_wall(const BoxSpec& box, Beta beta, int m_left);

// Full quantum cycle: insertion, measurement, expansion, removal.
struct SzilardReport {
  double w_ins = 0.0;
  double w_exp = 0.0;
  double w_rem = 0.0;
  double w_tot = 0.0;         // stage sum
  double w_tot_closed = 0.0;  // -1/beta sum p_m ln(p_m/p*_m)
  std::vector<double> p_m;
  std::vector<double> p_star_m;
  std::vector<WallEquilibrium> l_eq;
};

SzilardReport run_cycle(const BoxSpec& box, const WallConfig& wall, Beta beta);

// N = 1, l = L/2 decomposition: W_ins = ln2/beta - Delta, W_exp = Delta,
// W_rem = 0, with Delta = ln[z(L)/z(L/2)]/beta.
struct ClassicalStages {
  double w_ins = 0.0;
  double w_exp = 0.0;
  double w_rem = 0.0;
  double delta = 0.0;
};
ClassicalStages classical_stage_decomposition(const BoxSpec& box, Beta beta);

// isothermal single-particle expansion from V/partitions to V:
// W = -ln(partitions)/beta (work done on the gas)
double classical_szilard_work(Beta beta, int partitions = 2);

}  // namespace infotherm

#endif
