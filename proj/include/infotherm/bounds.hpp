#ifndef INFOTHERM_BOUNDS_HPP
#define INFOTHERM_BOUNDS_HPP

#include "infotherm/common.hpp"
#include "infotherm/density.hpp"

namespace infotherm {

// Environment heat capacity C_E(tau) = a * tau^exponent on [T, inf); the
// zero-temperature refinement integrates it for Q and S.
struct HeatCapacityModel {
  enum class Kind { power_law };
  Kind kind = Kind::power_law;
  double coefficient = 1.0;      // a > 0
  double exponent = 3.0;         // >= 0 (3 = phonon bath)
  double reference_temperature = 0.0;  // bath temperature T >= 0

  HeatCapacityModel(double a, double p, double t_ref);
  double value(double tau) const { return coefficient * std::pow(tau, exponent); }
};

// Q[S^{-1}(dS)]: entropy integral inverted by bracketed bisection (relative
// tolerance 1e-10), then the heat integral evaluated at the solution.
// delta_s is the bath entropy gain (= entropy removed from the system).
double zero_temperature_bound(const HeatCapacityModel& cap, double delta_s);

// closed form (3^{4/3}/4) dS^{4/3} / a^{1/3} for C = a T^3 at T = 0,
// used as the independent cross-check of the numeric path
double phonon_zero_t_closed_form(double a, double delta_s);

// kT ln2 + alpha/tau.  Planckian mode pins alpha to the strongly coupled
// fermionic-mode value a*kT*tau_Pl = 2.57946 (natural units, tau_Pl = beta);
// quoted for that specific model only, hence opt-in.
struct FiniteTimeAlpha {
  enum class Kind { explicit_value, planckian } kind = Kind::explicit_value;
  double alpha = 0.0;
  static FiniteTimeAlpha explicit_value(double a) { return {Kind::explicit_value, a}; }
  static FiniteTimeAlpha planckian() { return {Kind::planckian, 0.0}; }
};

double finite_time_bound(double tau, Beta beta, const FiniteTimeAlpha& model);

inline constexpr double kPlanckianA = 2.57946;

// Finite-bath entropy-production bounds for a d-dimensional bath of n
// particles.  The d = 2 source text also quotes Sigma >= 1/(3n), which does
// not follow from the general formula (that gives 1/n at dS = ln2); both are
// reported rather than silently picking one.
struct FiniteSizeBounds {
  double noninteracting = 0.0;        // (dS/ln d)^2 / n
  double universal = 0.0;             // 2 dS^2 / (ln^2(d-1) + 4)
  double interacting_reference = 0.0; // 2 (pi/n)^2, best known interacting protocol
  double qubit_quoted = 0.0;          // 1/(3n), quoted for d = 2 only
  bool qubit_discrepancy = false;     // set when d = 2 and the two disagree
};

FiniteSizeBounds finite_size_bounds(double delta_s, int d, long n);

// Single-shot information-battery bound in bits:
//   n >= S(rho) + V(rho)/(2 sqrt(M(rho))),
// V = tr(rho ln^2 rho) - S^2, M = V + (S + 1/ln2)^2 (all in nats, converted).
double single_shot_battery_bound_bits(const DensityMatrix& rho);

// surprisal variance V(rho) in nats^2
double surprisal_variance(const DensityMatrix& rho);

// W = (N/beta) [ln2 - ln(1-eps)/N]; distillation of N copies to maximally
// mixed with error eps
double distillation_erasure_cost(long n_copies, double epsilon, Beta beta);

}  // namespace infotherm

#endif
