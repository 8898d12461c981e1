#ifndef INFOTHERM_STOCHASTIC_HPP
#define INFOTHERM_STOCHASTIC_HPP

#include <vector>

#include "infotherm/langevin.hpp"
#include "infotherm/stats.hpp"

namespace infotherm {

// Q(r) = kT [ln2 + r ln r + (1-r) ln(1-r)], the success-rate-resolved
// generalisation of the erasure bound
double erasure_heat_bound(double success_rate, double kT);

// Double-well erasure run: barrier 8kT -> 2.2kT over one relaxation time,
// held low for tau while the tilt ramps to f_max, then restored.  Success is
// a final position in the right-hand well (x > 0, the ZERO state).
struct ErasureOutcome {
  double tau = 0.0;
  double f_max = 0.0;
  double success_rate = 0.0;
  double success_se = 0.0;
  double mean_heat = 0.0;  // mean dissipated heat, -<q>
  double heat_se = 0.0;
  std::vector<double> heat_samples;  // dissipated heat per trajectory
  double q_bound = 0.0;              // Q(r) at the measured rate
  bool bound_ok = false;             // mean_heat >= Q(r) - 3 SE
  bool tilt_ineffective = false;     // r within 2 SE of 1/2 despite f_max > 0
};

ErasureOutcome erasure_experiment(double tau, double f_max, const LangevinParams& params,
                                  long n_traj, unsigned threads = 0);

// the protocol erasure_experiment runs, exposed for the CLI and tests
PotentialSpec erasure_protocol(double tau, double f_max, double kT);
double erasure_cycle_duration(double tau);

// Jarzynski check on a harmonic stiffness protocol with analytic
// dF = (kT/2) ln(k_end/k_start); initial ensemble equilibrated at k_start.
struct JarzynskiReport {
  double exp_avg = 0.0;      // <e^{-beta W}>
  double exp_avg_se = 0.0;   // jackknife
  double rhs = 0.0;          // e^{-beta dF}
  double rel_deviation = 0.0;
  double delta_f = 0.0;
  MeanSe work;
  bool jensen_ok = false;  // <W> >= dF - 3 SE
};

JarzynskiReport jarzynski_check(const HarmonicSpec& protocol, const LangevinParams& params,
                                long n_traj, unsigned threads = 0);

}  // namespace infotherm

#endif
