#include "infotherm/gambling.hpp"

#include <cmath>
#include <functional>

#include "infotherm/parallel.hpp"
#include "infotherm/rng.hpp"

namespace infotherm {

TwoStateProcess::TwoStateProcess(Schedule g, double rate, Beta b, double duration)
    : gap(std::move(g)), attempt_rate(rate), beta(b), tau(duration) {
  if (!(rate > 0.0)) throw std::domain_error("TwoStateProcess: attempt rate must be > 0");
  if (!(duration > 0.0)) throw std::domain_error("TwoStateProcess: duration must be > 0");
}

double TwoStateProcess::rate_up(double t) const {
  return attempt_rate / (1.0 + std::exp(beta.value * gap(t)));
}

double TwoStateProcess::rate_down(double t) const {
  return attempt_rate / (1.0 + std::exp(-beta.value * gap(t)));
}

double TwoStateProcess::equilibrium_p1(double t) const {
  return 1.0 / (1.0 + std::exp(beta.value * gap(t)));
}

double TwoStateProcess::free_energy(double t) const {
  return -std::log1p(std::exp(-beta.value * gap(t))) / beta.value;
}

namespace {

// dp1/dt = up(t) - (up(t)+down(t)) p1; note up + down = attempt_rate
double p1_derivative(double up, double total, double p1) { return up - total * p1; }

std::vector<double> rk4_density(double p1_start, double dt, int grid,
                                const std::function<double(double)>& up_rate, double total_rate) {
  std::vector<double> p(static_cast<std::size_t>(grid) + 1);
  p[0] = p1_start;
  double p1 = p1_start;
  for (int k = 0; k < grid; ++k) {
    const double t = k * dt;
    const double u0 = up_rate(t);
    const double uh = up_rate(t + 0.5 * dt);
    const double u1 = up_rate(t + dt);
    const double k1 = p1_derivative(u0, total_rate, p1);
    const double k2 = p1_derivative(uh, total_rate, p1 + 0.5 * dt * k1);
    const double k3 = p1_derivative(uh, total_rate, p1 + 0.5 * dt * k2);
    const double k4 = p1_derivative(u1, total_rate, p1 + dt * k3);
    p1 += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    p[static_cast<std::size_t>(k) + 1] = p1;
  }
  return p;
}

}  // namespace

DensityTables integrate_densities(const TwoStateProcess& proc) {
  DensityTables tab;
  tab.dt = proc.tau / proc.grid;
  tab.forward_p1 = rk4_density(
      proc.equilibrium_p1(0.0), tab.dt, proc.grid,
      [&](double t) { return proc.rate_up(t); }, proc.attempt_rate);
  // reversed protocol, launched from equilibrium at the final gap value
  tab.reverse_p1 = rk4_density(
      proc.equilibrium_p1(proc.tau), tab.dt, proc.grid,
      [&](double s) { return proc.rate_up(proc.tau - s); }, proc.attempt_rate);
  return tab;
}

GamblingReport gambling_demon(const TwoStateProcess& proc, const StoppingRule& rule, long n_traj,
                              std::uint64_t seed, unsigned threads) {
  if (n_traj < 2) throw std::invalid_argument("gambling_demon: need an ensemble");
  const DensityTables tab = integrate_densities(proc);
  const double dt = tab.dt;
  const int grid = proc.grid;
  const double beta = proc.beta.value;
  const double kT = 1.0 / beta;
  const double f0 = proc.free_energy(0.0);

  // per-grid-node gap values and jump probabilities, shared read-only
  std::vector<double> gap_at(static_cast<std::size_t>(grid) + 1);
  std::vector<double> p_up(static_cast<std::size_t>(grid));    // P(0 -> 1) within step k
  std::vector<double> p_down(static_cast<std::size_t>(grid));  // P(1 -> 0)
  for (int k = 0; k <= grid; ++k) gap_at[static_cast<std::size_t>(k)] = proc.gap(k * dt);
  for (int k = 0; k < grid; ++k) {
    const double t_mid = (k + 0.5) * dt;
    p_up[static_cast<std::size_t>(k)] = proc.rate_up(t_mid) * dt;
    p_down[static_cast<std::size_t>(k)] = proc.rate_down(t_mid) * dt;
    if (p_up[static_cast<std::size_t>(k)] > 0.2 || p_down[static_cast<std::size_t>(k)] > 0.2)
      throw std::domain_error("gambling_demon: grid too coarse for the attempt rate");
  }

  struct Sample {
    double w = 0.0, df = 0.0, delta = 0.0, stop = 0.0, ft = 0.0;
    bool excluded = false;
  };
  std::vector<Sample> samples(static_cast<std::size_t>(n_traj));

  parallel_for(static_cast<std::size_t>(n_traj), threads, [&](std::size_t i) {
    Rng rng(derive_stream_seed(seed, i));
    int x = rng.uniform() < proc.equilibrium_p1(0.0) ? 1 : 0;
    double w = 0.0;
    int k = 0;
    auto stop_now = [&]() {
      if (rule.kind == StoppingRule::Kind::deadline_only) return false;
      return w >= rule.threshold;
    };
    while (k < grid && !stop_now()) {
      // protocol moves first (work at held state), then the state may jump
      const double de = gap_at[static_cast<std::size_t>(k) + 1] - gap_at[static_cast<std::size_t>(k)];
      if (x == 1) w += de;
      const double u = rng.uniform();
      if (x == 0) {
        if (u < p_up[static_cast<std::size_t>(k)]) x = 1;
      } else {
        if (u < p_down[static_cast<std::size_t>(k)]) x = 0;
      }
      ++k;
    }
    Sample s;
    s.w = w;
    s.stop = k * dt;
    s.df = proc.free_energy(k * dt) - f0;
    // delta measured against the instantaneous-equilibrium reference; this is
    // the form the stopped fluctuation theorem takes once dF is pinned to
    // F_eq(gap(T)) - F_eq(gap(0)) (see the demon's martingale
    // rho~(x_t, tau - t) e^{beta Q(t)} / pi_0(x_0), exact for any rho~ init)
    const double p1_eq = proc.equilibrium_p1(k * dt);
    const double ref = x == 1 ? p1_eq : 1.0 - p1_eq;
    const double rev = x == 1 ? tab.reverse_p1[static_cast<std::size_t>(grid - k)]
                              : 1.0 - tab.reverse_p1[static_cast<std::size_t>(grid - k)];
    if (rev < 1e-300) {
      s.excluded = true;
    } else {
      s.delta = std::log(ref / rev);
      s.ft = std::exp(-beta * (s.w - s.df) - s.delta);
    }
    samples[i] = s;
  });

  std::vector<double> w, df, delta, margin, ft, stop;
  w.reserve(samples.size());
  long excluded = 0;
  for (const Sample& s : samples) {
    if (s.excluded) {
      ++excluded;
      continue;
    }
    w.push_back(s.w);
    df.push_back(s.df);
    delta.push_back(s.delta);
    margin.push_back(s.w - s.df + kT * s.delta);
    ft.push_back(s.ft);
    stop.push_back(s.stop);
  }

  GamblingReport rep;
  rep.n_traj = static_cast<long>(w.size());
  rep.n_excluded = excluded;
  rep.work = mean_se(w);
  rep.delta_f = mean_se(df);
  rep.delta = mean_se(delta);
  rep.margin = mean_se(margin);
  rep.ft_estimator = mean_se(ft).mean;
  rep.ft_se = jackknife_se(ft);
  rep.mean_stop_time = mean_se(stop).mean;
  return rep;
}

}  // namespace infotherm
