#ifndef INFOTHERM_LANGEVIN_HPP
#define INFOTHERM_LANGEVIN_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "infotherm/common.hpp"
#include "infotherm/rng.hpp"

namespace infotherm {

// Piecewise-linear parameter schedule on [0, tau].  A duplicated knot time
// encodes a jump; the value at the duplicated instant is the earlier knot
// (left-continuous), so quench work lands in the following step.
class Schedule {
 public:
  explicit Schedule(double constant);
  Schedule(std::vector<double> times, std::vector<double> values);

  double operator()(double t) const;
  double max_abs() const;
  double end_time() const { return t_.back(); }

 private:
  std::vector<double> t_, v_;
};

// U(x,t) = b(t) (x^2 - 1)^2 - f(t) x on x in [-2, 2] with reflecting walls.
// Lengths are in units of the well half-separation (minima at +-1).
struct DoubleWellSpec {
  Schedule barrier;
  Schedule tilt;
};

// U(x,t) = k(t) x^2 / 2; unbounded domain with a divergence guard at |x| > 10.
struct HarmonicSpec {
  Schedule stiffness;
};

using PotentialSpec = std::variant<DoubleWellSpec, HarmonicSpec>;

double potential_value(const PotentialSpec& pot, double x, double t);
double potential_grad(const PotentialSpec& pot, double x, double t);

// Euler-Maruyama parameters; dimensionless convention gamma = kT = 1 makes
// t_relax = gamma (well separation)^2 / kT the time unit.
struct LangevinParams {
  double friction = 1.0;
  double kT = 1.0;
  double dt = 2e-4;
  std::uint64_t seed = 1;
  long n_steps = 0;

  void validate(double max_curvature) const;  // dt |U''|max / gamma < 0.1
};

// Sampled path with per-step energy bookkeeping.  Increment conventions:
//   dw_i = U(x_i, t_{i+1}) - U(x_i, t_i)        (parameter move, position held)
//   dq_i = U(x_{i+1}, t_{i+1}) - U(x_i, t_{i+1}) (position move, protocol held)
// which makes the first law U(end) - U(start) = w + q exact per step.
struct Trajectory {
  std::vector<double> times;
  std::vector<double> positions;
  std::vector<double> work_increments;
  std::vector<double> heat_increments;
};

Trajectory simulate(const PotentialSpec& pot, const LangevinParams& params, double x0);

// protocol work sum U(x_i, t_{i+1}) - U(x_i, t_i) recomputed from the path
double trajectory_work(const Trajectory& traj, const PotentialSpec& pot);

// heat into the system: the Stratonovich line integral of -dU/dx along each
// displacement, accumulated exactly as a potential difference at fixed time
double trajectory_heat(const Trajectory& traj, const PotentialSpec& pot);

// Streaming single-trajectory run used by the ensemble drivers: returns final
// position plus accumulated (work, heat) without storing the path.
struct PathSummary {
  double x_final = 0.0;
  double work = 0.0;
  double heat = 0.0;
};
PathSummary run_path(const PotentialSpec& pot, const LangevinParams& params, double x0, Rng& rng);

// draws x0 from exp(-U(x,0)/kT) by rejection on the potential's domain
double sample_equilibrium_x0(const PotentialSpec& pot, double kT, Rng& rng);

}  // namespace infotherm

#endif
