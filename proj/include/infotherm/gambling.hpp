#ifndef INFOTHERM_GAMBLING_HPP
#define INFOTHERM_GAMBLING_HPP

#include <cstdint>
#include <vector>

#include "infotherm/common.hpp"
#include "infotherm/langevin.hpp"
#include "infotherm/stats.hpp"

namespace infotherm {

// Driven two-state system (the single-electron-box abstraction): level 0 at
// zero energy, level 1 at gap(t), Fermi rates  up = G/(1+e^{beta E}),
// down = G/(1+e^{-beta E}) against a bath at beta.  The protocol runs on
// [0, tau]; forward and reverse occupation densities are integrated by RK4 on
// a fixed grid of tau/1e4 so the log-ratio delta is accurate inside the
// exponential estimator.
struct TwoStateProcess {
  Schedule gap;          // E(t)
  double attempt_rate = 1.0;
  Beta beta;
  double tau = 1.0;
  int grid = 10000;

  TwoStateProcess(Schedule g, double rate, Beta b, double duration);

  double rate_up(double t) const;
  double rate_down(double t) const;
  double equilibrium_p1(double t) const;    // at the instantaneous gap
  double free_energy(double t) const;       // F_eq(E(t)) = -ln(1+e^{-beta E})/beta
};

// Occupation density tables at the grid nodes.  forward starts from
// equilibrium at gap(0); reverse runs the time-reversed protocol from
// equilibrium at gap(tau), so the stochastic distinguishability
// delta(t) = ln[pi_t(x) / rho~(x, tau - t)] vanishes identically for a
// deadline-only strategy and for undriven protocols.
struct DensityTables {
  std::vector<double> forward_p1;  // rho(x=1, t_k)
  std::vector<double> reverse_p1;  // rho~(x=1, s_k), s = time under reversed protocol
  double dt = 0.0;
};

DensityTables integrate_densities(const TwoStateProcess& proc);

// Gambling strategies: always ride to the horizon, or cash out the first time
// the accumulated work crosses a threshold.  T(x_[0,tau]) <= tau always.
struct StoppingRule {
  enum class Kind { deadline_only, work_threshold };
  Kind kind = Kind::deadline_only;
  double threshold = 0.0;

  static StoppingRule deadline() { return {Kind::deadline_only, 0.0}; }
  static StoppingRule work_threshold(double w_star) { return {Kind::work_threshold, w_star}; }
};

struct GamblingReport {
  MeanSe work;        // <W>_T
  MeanSe delta_f;     // <dF>_T, F_eq(gap(T)) - F_eq(gap(0))
  MeanSe delta;       // <delta>_T in nats
  MeanSe margin;      // per-trajectory W - dF + kT*delta
  double ft_estimator = 0.0;  // <exp(-beta(W - dF) - delta)>
  double ft_se = 0.0;         // jackknife
  double mean_stop_time = 0.0;
  long n_traj = 0;
  long n_excluded = 0;  // reverse density underflow (< 1e-300)
};

GamblingReport gambling_demon(const TwoStateProcess& proc, const StoppingRule& rule, long n_traj,
                              std::uint64_t seed, unsigned threads = 0);

}  // namespace infotherm

#endif
