#include "infotherm/ratchet.hpp"

#include <cmath>
#include <vector>

#include "infotherm/rng.hpp"
#include "infotherm/stats.hpp"

namespace infotherm {

namespace {

// continuous-time jump dynamics between ticks; the wall blocks crossings of
// the doorway between rungs w-1 and w in both directions
struct LadderState {
  long level = 0;
  long wall = 0;
  bool walled = true;
};

void evolve_interval(LadderState& s, double duration, double rate_up, double rate_down, Rng& rng) {
  double t = 0.0;
  for (;;) {
    const bool up_ok = !s.walled || (s.level + 1 != s.wall);
    const bool down_ok = !s.walled || (s.level != s.wall);
    const double total = (up_ok ? rate_up : 0.0) + (down_ok ? rate_down : 0.0);
    if (total <= 0.0) return;
    t += -std::log(rng.uniform_pos()) / total;
    if (t >= duration) return;
    const double pick = rng.uniform() * total;
    if (up_ok && pick < rate_up)
      ++s.level;
    else if (down_ok)
      --s.level;
  }
}

}  // namespace

RatchetReport staircase_ratchet(const RatchetParams& p, const MeasurementModel& meas) {
  if (!(p.rate_up > 0.0) || !(p.rate_down > 0.0))
    throw std::domain_error("staircase_ratchet: rates must be > 0");
  if (!(p.step_energy > 0.0)) throw std::domain_error("staircase_ratchet: step energy must be > 0");
  if (p.rate_up >= p.rate_down)
    throw std::domain_error("staircase_ratchet: detailed balance needs rate_up < rate_down");
  if (meas.n_states() != 2 || meas.n_outcomes() != 2)
    throw std::invalid_argument("staircase_ratchet: measurement channel must be binary");
  if (p.n_ticks < 1) throw std::domain_error("staircase_ratchet: need at least one tick");

  // detailed balance fixes the temperature: rate_up/rate_down = exp(-beta dE)
  const double beta = std::log(p.rate_down / p.rate_up) / p.step_energy;

  Rng rng(p.seed);
  LadderState s;
  s.walled = p.policy != RatchetParams::Policy::none;

  Eigen::MatrixXd counts = Eigen::MatrixXd::Zero(2, 2);  // (x, m)
  std::vector<double> tick_gain(static_cast<std::size_t>(p.n_ticks));
  bool monotone = true;
  long prev_level = s.level;

  for (long k = 0; k < p.n_ticks; ++k) {
    evolve_interval(s, p.feedback_period, p.rate_up, p.rate_down, rng);
    if (s.level < prev_level) monotone = false;
    tick_gain[static_cast<std::size_t>(k)] = static_cast<double>(s.level - prev_level) * p.step_energy;
    prev_level = s.level;

    if (p.policy == RatchetParams::Policy::none) continue;

    // binary read: particle strictly above the wall doorway
    const int x = s.level >= s.wall + 1 ? 1 : 0;
    const int m = rng.uniform() < meas.conditional(1, static_cast<std::size_t>(x)) ? 1 : 0;
    counts(x, m) += 1.0;
    if (m == 1) {
      ++s.wall;
    } else if (p.policy == RatchetParams::Policy::adaptive && rng.uniform() < p.release_prob) {
      --s.wall;
    }
  }

  RatchetReport rep;
  rep.n_ticks = p.n_ticks;
  rep.kT = 1.0 / beta;
  rep.monotone = monotone;
  const double total_time = static_cast<double>(p.n_ticks) * p.feedback_period;
  rep.mean_velocity = static_cast<double>(s.level) / total_time;
  const MeanSe g = mean_se(tick_gain);
  rep.gain_per_tick = g.mean;
  // per-tick gains are serially correlated; block the series before the SE
  {
    const std::size_t blocks = 50;
    std::vector<double> bm;
    const std::size_t len = tick_gain.size() / blocks;
    if (len >= 2) {
      for (std::size_t b = 0; b < blocks; ++b) {
        double sum = 0.0;
        for (std::size_t i = b * len; i < (b + 1) * len; ++i) sum += tick_gain[i];
        bm.push_back(sum / static_cast<double>(len));
      }
      rep.gain_se = mean_se(bm).se;
    } else {
      rep.gain_se = g.se;
    }
  }

  rep.info_uniform = meas.mutual_information(ProbDist::uniform(2));
  const double n_meas = counts.sum();
  if (n_meas > 0.0) {
    rep.info_empirical = mutual_information_classical(JointDist(counts / n_meas));
  }
  return rep;
}

}  // namespace infotherm
