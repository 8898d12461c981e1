#include "infotherm/langevin.hpp"

#include <cmath>
#include <string>

namespace infotherm {

Schedule::Schedule(double constant) : t_{0.0, 1.0}, v_{constant, constant} {}

Schedule::Schedule(std::vector<double> times, std::vector<double> values)
    : t_(std::move(times)), v_(std::move(values)) {
  if (t_.size() != v_.size() || t_.size() < 2)
    throw std::invalid_argument("Schedule: need matching times/values with at least 2 knots");
  for (std::size_t i = 1; i < t_.size(); ++i)
    if (t_[i] < t_[i - 1]) throw std::invalid_argument("Schedule: knot times must be non-decreasing");
  for (double v : v_)
    if (!std::isfinite(v)) throw std::invalid_argument("Schedule: non-finite value");
}

double Schedule::operator()(double t) const {
  if (t <= t_.front()) return v_.front();
  if (t >= t_.back()) return v_.back();
  // segment with t_i < t <= t_{i+1}; duplicated knots act as jumps
  std::size_t i = 0;
  while (i + 2 < t_.size() && t_[i + 1] < t) ++i;
  const double dt = t_[i + 1] - t_[i];
  if (dt <= 0.0) return v_[i + 1];
  const double u = (t - t_[i]) / dt;
  return v_[i] + u * (v_[i + 1] - v_[i]);
}

double Schedule::max_abs() const {
  double m = 0.0;
  for (double v : v_) m = std::max(m, std::abs(v));
  return m;
}

namespace {

struct WellAdapter {
  const DoubleWellSpec& s;
  double b = 0.0, f = 0.0;
  void at(double t) {
    b = s.barrier(t);
    f = s.tilt(t);
  }
  double value(double x) const {
    const double u = x * x - 1.0;
    return b * u * u - f * x;
  }
  double grad(double x) const { return 4.0 * b * x * (x * x - 1.0) - f; }
  double max_curvature() const { return 44.0 * s.barrier.max_abs(); }  // |U''| peak at x = +-2
  void enforce(double& x, long) const {
    // reflecting walls at the domain edges
    while (x > 2.0 || x < -2.0) {
      if (x > 2.0) x = 4.0 - x;
      if (x < -2.0) x = -4.0 - x;
    }
  }
  double domain_lo() const { return -2.0; }
  double domain_hi() const { return 2.0; }
};

struct HarmonicAdapter {
  const HarmonicSpec& s;
  double k = 0.0;
  void at(double t) { k = s.stiffness(t); }
  double value(double x) const { return 0.5 * k * x * x; }
  double grad(double x) const { return k * x; }
  double max_curvature() const { return s.stiffness.max_abs(); }
  void enforce(double& x, long step) const {
    if (std::abs(x) > 10.0)
      throw divergence_error("langevin: |x| exceeded the domain bound at step " + std::to_string(step));
  }
  double domain_lo() const { return -10.0; }
  double domain_hi() const { return 10.0; }
};

template <typename Adapter, typename Observer>
PathSummary integrate(Adapter pot, const LangevinParams& p, double x0, Rng& rng, Observer&& obs) {
  p.validate(pot.max_curvature());
  const double mobility = p.dt / p.friction;
  const double noise = std::sqrt(2.0 * p.kT * p.dt / p.friction);

  PathSummary out;
  double x = x0;
  pot.at(0.0);
  double u_prev = pot.value(x);
  obs(0L, 0.0, x, 0.0, 0.0);
  for (long i = 0; i < p.n_steps; ++i) {
    const double t_next = (i + 1) * p.dt;
    pot.at(t_next);
    const double dw = pot.value(x) - u_prev;  // parameter moved, position held
    double x_next = x - pot.grad(x) * mobility + noise * rng.normal();
    pot.enforce(x_next, i);
    const double u_next = pot.value(x_next);
    const double dq = u_next - pot.value(x);  // position moved, protocol held
    out.work += dw;
    out.heat += dq;
    x = x_next;
    u_prev = u_next;
    obs(i + 1, t_next, x, dw, dq);
  }
  out.x_final = x;
  return out;
}

struct NullObserver {
  void operator()(long, double, double, double, double) const {}
};

}  // namespace

void LangevinParams::validate(double max_curvature) const {
  if (!(friction > 0.0) || !(kT > 0.0) || !(dt > 0.0))
    throw std::domain_error("LangevinParams: friction, kT and dt must be > 0");
  if (n_steps < 0) throw std::domain_error("LangevinParams: negative step count");
  if (dt * max_curvature / friction >= 0.1)
    throw std::domain_error("LangevinParams: dt too large for the potential stiffness (dt |U''|/gamma >= 0.1)");
}

double potential_value(const PotentialSpec& pot, double x, double t) {
  return std::visit(
      [&](const auto& s) {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, DoubleWellSpec>) {
          WellAdapter a{s};
          a.at(t);
          return a.value(x);
        } else {
          HarmonicAdapter a{s};
          a.at(t);
          return a.value(x);
        }
      },
      pot);
}

double potential_grad(const PotentialSpec& pot, double x, double t) {
  return std::visit(
      [&](const auto& s) {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, DoubleWellSpec>) {
          WellAdapter a{s};
          a.at(t);
          return a.grad(x);
        } else {
          HarmonicAdapter a{s};
          a.at(t);
          return a.grad(x);
        }
      },
      pot);
}

Trajectory simulate(const PotentialSpec& pot, const LangevinParams& params, double x0) {
  Trajectory traj;
  traj.times.reserve(static_cast<std::size_t>(params.n_steps) + 1);
  traj.positions.reserve(static_cast<std::size_t>(params.n_steps) + 1);
  traj.work_increments.reserve(static_cast<std::size_t>(params.n_steps));
  traj.heat_increments.reserve(static_cast<std::size_t>(params.n_steps));
  Rng rng(params.seed);
  auto obs = [&](long step, double t, double x, double dw, double dq) {
    traj.times.push_back(t);
    traj.positions.push_back(x);
    if (step > 0) {
      traj.work_increments.push_back(dw);
      traj.heat_increments.push_back(dq);
    }
  };
  std::visit(
      [&](const auto& s) {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, DoubleWellSpec>)
          integrate(WellAdapter{s}, params, x0, rng, obs);
        else
          integrate(HarmonicAdapter{s}, params, x0, rng, obs);
      },
      pot);
  return traj;
}

double trajectory_work(const Trajectory& traj, const PotentialSpec& pot) {
  double w = 0.0;
  for (std::size_t i = 0; i + 1 < traj.times.size(); ++i)
    w += potential_value(pot, traj.positions[i], traj.times[i + 1]) -
         potential_value(pot, traj.positions[i], traj.times[i]);
  return w;
}

double trajectory_heat(const Trajectory& traj, const PotentialSpec& pot) {
  double q = 0.0;
  for (std::size_t i = 0; i + 1 < traj.times.size(); ++i)
    q += potential_value(pot, traj.positions[i + 1], traj.times[i + 1]) -
         potential_value(pot, traj.positions[i], traj.times[i + 1]);
  return q;
}

PathSummary run_path(const PotentialSpec& pot, const LangevinParams& params, double x0, Rng& rng) {
  return std::visit(
      [&](const auto& s) {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, DoubleWellSpec>)
          return integrate(WellAdapter{s}, params, x0, rng, NullObserver{});
        else
          return integrate(HarmonicAdapter{s}, params, x0, rng, NullObserver{});
      },
      pot);
}

double sample_equilibrium_x0(const PotentialSpec& pot, double kT, Rng& rng) {
  double lo = -2.0, hi = 2.0;
  std::visit(
      [&](const auto& s) {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, DoubleWellSpec>) {
          lo = WellAdapter{s}.domain_lo();
          hi = WellAdapter{s}.domain_hi();
        } else {
          lo = -10.0;
          hi = 10.0;
        }
      },
      pot);
  // rejection against the potential minimum on a coarse scan
  double u_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 400; ++i) {
    const double x = lo + (hi - lo) * i / 400.0;
    u_min = std::min(u_min, potential_value(pot, x, 0.0));
  }
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const double x = lo + (hi - lo) * rng.uniform();
    const double u = potential_value(pot, x, 0.0);
    if (rng.uniform() < std::exp(-(u - u_min) / kT)) return x;
  }
  throw std::runtime_error("sample_equilibrium_x0: rejection sampling failed");
}

}  // namespace infotherm
