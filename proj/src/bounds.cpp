#include "infotherm/bounds.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>

namespace infotherm {

namespace {
constexpr double kPi = 3.14159265358979323846;

// integral of C(tau)/tau^div on [lo, hi]; tanh_sinh handles the integrable
// endpoint singularity at tau = 0 for exponents in (0, 1)
double integrate(const HeatCapacityModel& cap, double lo, double hi, bool over_tau) {
  if (hi <= lo) return 0.0;
  boost::math::quadrature::tanh_sinh<double> quad;
  auto f = [&](double tau) {
    const double c = cap.value(tau);
    return over_tau ? c / tau : c;
  };
  return quad.integrate(f, lo, hi);
}
}  // namespace

HeatCapacityModel::HeatCapacityModel(double a, double p, double t_ref)
    : coefficient(a), exponent(p), reference_temperature(t_ref) {
  if (!(a > 0.0)) throw std::domain_error("HeatCapacityModel: coefficient must be > 0");
  if (p < 0.0) throw std::domain_error("HeatCapacityModel: exponent must be >= 0");
  if (t_ref < 0.0) throw std::domain_error("HeatCapacityModel: reference temperature must be >= 0");
  if (t_ref == 0.0 && p == 0.0)
    throw std::domain_error("HeatCapacityModel: constant capacity at T = 0 has divergent entropy integral");
}

double zero_temperature_bound(const HeatCapacityModel& cap, double delta_s) {
  if (delta_s < 0.0) throw std::domain_error("zero_temperature_bound: delta_s must be >= 0");
  if (delta_s == 0.0) return 0.0;
  const double t0 = cap.reference_temperature;

  auto entropy_gain = [&](double t_prime) { return integrate(cap, t0, t_prime, true); };

  // monotonicity of S(T') needs C > 0 above T; power-law with a > 0 satisfies it
  double hi = (t0 > 0.0) ? 2.0 * t0 : 1.0;
  int expansions = 0;
  while (entropy_gain(hi) < delta_s) {
    hi *= 2.0;
    if (++expansions > 2000 || !std::isfinite(hi))
      throw unreachable_entropy_error("zero_temperature_bound: requested entropy unreachable at finite temperature");
  }
  double lo = t0;
  // bracketed bisection to relative tolerance 1e-10 on T'
  while ((hi - lo) > 1e-10 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (entropy_gain(mid) < delta_s)
      lo = mid;
    else
      hi = mid;
  }
  const double t_prime = 0.5 * (lo + hi);
  return integrate(cap, t0, t_prime, false);
}

double phonon_zero_t_closed_form(double a, double delta_s) {
  return std::pow(3.0, 4.0 / 3.0) / 4.0 * std::pow(delta_s, 4.0 / 3.0) / std::cbrt(a);
}

double finite_time_bound(double tau, Beta beta, const FiniteTimeAlpha& model) {
  if (!(tau > 0.0)) throw std::domain_error("finite_time_bound: tau must be > 0");
  const double alpha =
      (model.kind == FiniteTimeAlpha::Kind::planckian) ? kPlanckianA : model.alpha;
  return kLn2 / beta.value + alpha / tau;
}

FiniteSizeBounds finite_size_bounds(double delta_s, int d, long n) {
  if (d < 2) throw std::domain_error("finite_size_bounds: dimension must be >= 2");
  if (n < 1) throw std::domain_error("finite_size_bounds: bath size must be >= 1");
  FiniteSizeBounds b;
  const double ds_per_ln_d = delta_s / std::log(static_cast<double>(d));
  b.noninteracting = ds_per_ln_d * ds_per_ln_d / static_cast<double>(n);
  const double lnd1 = std::log(static_cast<double>(d - 1));  // d = 2 gives 0, denominator stays 4
  b.universal = 2.0 * delta_s * delta_s / (lnd1 * lnd1 + 4.0);
  b.interacting_reference = 2.0 * (kPi / static_cast<double>(n)) * (kPi / static_cast<double>(n));
  if (d == 2) {
    b.qubit_quoted = 1.0 / (3.0 * static_cast<double>(n));
    b.qubit_discrepancy = std::abs(b.qubit_quoted - b.noninteracting) > 1e-12;
  }
  return b;
}

double surprisal_variance(const DensityMatrix& rho) {
  double s = 0.0, s2 = 0.0;
  for (double v : rho.eigenvalues()) {
    if (v < 1e-14) continue;
    const double l = std::log(v);
    s -= v * l;
    s2 += v * l * l;
  }
  return s2 - s * s;
}

double single_shot_battery_bound_bits(const DensityMatrix& rho) {
  const double s = von_neumann_entropy(rho);
  const double v = surprisal_variance(rho);
  const double m = v + (s + 1.0 / kLn2) * (s + 1.0 / kLn2);
  return nats_to_bits(s + v / (2.0 * std::sqrt(m)));
}

double distillation_erasure_cost(long n_copies, double epsilon, Beta beta) {
  if (n_copies < 1) throw std::domain_error("distillation_erasure_cost: need at least one copy");
  if (epsilon < 0.0 || epsilon >= 1.0)
    throw std::domain_error("distillation_erasure_cost: error must lie in [0, 1)");
  const double n = static_cast<double>(n_copies);
  return n / beta.value * (kLn2 - std::log1p(-epsilon) / n);
}

}  // namespace infotherm
