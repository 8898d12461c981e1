#include "infotherm/szilard.hpp"

#include <algorithm>
#include <cmath>

namespace infotherm {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kPrune = 1e-18;  // enumeration weights below this cannot move the sum

double logsumexp(const std::vector<double>& xs) {
  const double m = *std::max_element(xs.begin(), xs.end());
  double s = 0.0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}
}  // namespace

BoxSpec::BoxSpec(double l, double m, int n, Statistics stat, int cutoff)
    : length(l), mass(m), n_particles(n), statistics(stat), n_max(cutoff) {
  if (!(l > 0.0) || !(m > 0.0)) throw std::domain_error("BoxSpec: length and mass must be > 0");
  if (n < 1 || n > 3) throw std::domain_error("BoxSpec: particle number limited to 1..3");
  if (cutoff < 50) throw std::domain_error("BoxSpec: level cutoff must be >= 50");
}

double BoxSpec::eps1() const { return kPi * kPi / (2.0 * mass * length * length); }

WallConfig::WallConfig(double l, const BoxSpec& box) : position(l) {
  if (!(l > 0.0 && l < box.length))
    throw std::domain_error("WallConfig: wall must lie strictly inside the box");
}

SpectrumModel box_levels(const BoxSpec& box, double segment_length) {
  if (!(segment_length > 0.0)) throw std::domain_error("box_levels: segment length must be > 0");
  return SpectrumModel::box_1d(box.mass, segment_length, box.n_max);
}

SegmentEnsemble segment_ensemble(const BoxSpec& box, double ell, int k, Beta beta) {
  SegmentEnsemble out;
  if (k == 0) return out;  // empty segment: Z = 1, E = 0

  const int n = box.n_max;
  const double e1 = kPi * kPi / (2.0 * box.mass * ell * ell);
  std::vector<double> eps(static_cast<std::size_t>(n));
  std::vector<double> x(static_cast<std::size_t>(n));  // e^{-beta(eps_n - eps_1)} <= 1
  for (int i = 0; i < n; ++i) {
    eps[static_cast<std::size_t>(i)] = e1 * (i + 1.0) * (i + 1.0);
    x[static_cast<std::size_t>(i)] = std::exp(-beta.value * (eps[static_cast<std::size_t>(i)] - e1));
  }

  // single-particle truncation tail check at the working beta
  double z1 = 0.0;
  for (double xi : x) z1 += xi;
  if (x.back() / z1 >= 1e-10)
    throw cutoff_error("segment_ensemble: n_max insufficient, truncation tail above 1e-10");

  if (box.statistics == Statistics::boltzmann) {
    // Z_k = z1^k / k!; ratios of shifted sums keep everything finite
    double e_mean = 0.0;
    for (int i = 0; i < n; ++i) e_mean += eps[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
    e_mean /= z1;
    const double log_fact[] = {0.0, 0.0, std::log(2.0), std::log(6.0)};
    out.log_z = k * (std::log(z1) - beta.value * e1) - log_fact[k];
    out.mean_energy = k * e_mean;
    return out;
  }

  const bool fermi = box.statistics == Statistics::fermion;
  // minimal configuration energy sets the shift
  double e_min = 0.0;
  if (fermi) {
    for (int i = 0; i < k; ++i) e_min += eps[static_cast<std::size_t>(i)];
  } else {
    e_min = k * e1;
  }

  double zsum = 0.0, esum = 0.0;
  auto add = [&](double e_cfg) {
    const double w = std::exp(-beta.value * (e_cfg - e_min));
    zsum += w;
    esum += e_cfg * w;
    return w;
  };

  if (k == 1) {
    for (int a = 0; a < n; ++a)
      if (add(eps[static_cast<std::size_t>(a)]) < kPrune) break;
  } else if (k == 2) {
    for (int a = 0; a < n; ++a) {
      const int b0 = fermi ? a + 1 : a;
      if (b0 >= n) break;
      double first = 0.0;
      for (int b = b0; b < n; ++b) {
        const double w = add(eps[static_cast<std::size_t>(a)] + eps[static_cast<std::size_t>(b)]);
        if (b == b0) first = w;
        if (w < kPrune) break;
      }
      if (first < kPrune) break;
    }
  } else {  // k == 3
    for (int a = 0; a < n; ++a) {
      const int b0 = fermi ? a + 1 : a;
      if (b0 >= n) break;
      double a_first = 0.0;
      for (int b = b0; b < n; ++b) {
        const int c0 = fermi ? b + 1 : b;
        if (c0 >= n) break;
        double b_first = 0.0;
        for (int c = c0; c < n; ++c) {
          const double w = add(eps[static_cast<std::size_t>(a)] + eps[static_cast<std::size_t>(b)] +
                               eps[static_cast<std::size_t>(c)]);
          if (c == c0) b_first = w;
          if (w < kPrune) break;
        }
        if (b == b0) a_first = b_first;
        if (b_first < kPrune) break;
      }
      if (a_first < kPrune) break;
    }
  }

  out.log_z = std::log(zsum) - beta.value * e_min;
  out.mean_energy = esum / zsum;
  return out;
}

double log_sector_partition(const BoxSpec& box, const WallConfig& wall, int m_left, Beta beta) {
  if (m_left < 0 || m_left > box.n_particles)
    throw std::domain_error("sector_partition: occupation outside [0, N]");
  const double l = wall.position;
  const SegmentEnsemble left = segment_ensemble(box, l, m_left, beta);
  const SegmentEnsemble right = segment_ensemble(box, box.length - l, box.n_particles - m_left, beta);
  return left.log_z + right.log_z;
}

double sector_partition(const BoxSpec& box, const WallConfig& wall, int m_left, Beta beta) {
  return std::exp(log_sector_partition(box, wall, m_left, beta));
}

namespace {
std::vector<double> log_sectors(const BoxSpec& box, double l, Beta beta) {
  const WallConfig wall(l, box);
  std::vector<double> lz(static_cast<std::size_t>(box.n_particles) + 1);
  for (int m = 0; m <= box.n_particles; ++m)
    lz[static_cast<std::size_t>(m)] = log_sector_partition(box, wall, m, beta);
  return lz;
}

// d ln Z_m / dl via the force balance: eps_n ~ ell^-2 gives
// d ln z / d ell = +2 beta <E> / ell for each segment.
double wall_force(const BoxSpec& box, double l, int m, Beta beta) {
  const SegmentEnsemble left = segment_ensemble(box, l, m, beta);
  const SegmentEnsemble right = segment_ensemble(box, box.length - l, box.n_particles - m, beta);
  return 2.0 * beta.value * (left.mean_energy / l - right.mean_energy / (box.length - l));
}
}  // namespace

ProbDist measurement_probs(const BoxSpec& box, const WallConfig& wall, Beta beta) {
  const std::vector<double> lz = log_sectors(box, wall.position, beta);
  const double total = logsumexp(lz);
  std::vector<double> p(lz.size());
  for (std::size_t i = 0; i < lz.size(); ++i) p[i] = std::exp(lz[i] - total);
  // renormalise away the last ulp so ProbDist's 1e-12 gate never trips
  double s = 0.0;
  for (double v : p) s += v;
  for (double& v : p) v /= s;
  return ProbDist(std::move(p));
}

WallEquilibrium equilibrium_wall(const BoxSpec& box, Beta beta, int m_left) {
  if (m_left < 0 || m_left > box.n_particles)
    throw std::domain_error("equilibrium_wall: occupation outside [0, N]");
  WallEquilibrium eq;
  if (m_left == 0) {
    eq.position = 0.0;
    eq.at_boundary = true;
    return eq;
  }
  if (m_left == box.n_particles) {
    eq.position = box.length;
    eq.at_boundary = true;
    return eq;
  }
  // interior occupation: ln Z_m is concave in l with force -> +inf at 0 and
  // -inf at L, so a sign change always brackets the root
  double lo = 1e-9 * box.length, hi = (1.0 - 1e-9) * box.length;
  double flo = wall_force(box, lo, m_left, beta);
  double fhi = wall_force(box, hi, m_left, beta);
  if (flo < 0.0 || fhi > 0.0) {
    // no interior sign change: run to whichever end the force points at
    eq.position = flo < 0.0 ? 0.0 : box.length;
    eq.at_boundary = true;
    return eq;
  }
  for (int it = 0; it < 200 && (hi - lo) > 1e-13 * box.length; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f = wall_force(box, mid, m_left, beta);
    if (f > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  eq.position = 0.5 * (lo + hi);
  return eq;
}

SzilardReport run_cycle(const BoxSpec& box, const WallConfig& wall, Beta beta) {
  const int n = box.n_particles;
  SzilardReport rep;

  // full box, no wall
  const double log_z_full = segment_ensemble(box, box.length, n, beta).log_z;

  const std::vector<double> lz_at_wall = log_sectors(box, wall.position, beta);
  const double log_z_wall = logsumexp(lz_at_wall);
  rep.p_m.resize(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m)
    rep.p_m[static_cast<std::size_t>(m)] = std::exp(lz_at_wall[static_cast<std::size_t>(m)] - log_z_wall);

  rep.w_ins = (log_z_wall - log_z_full) / beta.value;

  rep.p_star_m.resize(static_cast<std::size_t>(n) + 1);
  rep.l_eq.resize(static_cast<std::size_t>(n) + 1);
  rep.w_exp = 0.0;
  rep.w_rem = 0.0;
  double w_closed = 0.0;
  for (int m = 0; m <= n; ++m) {
    const std::size_t mi = static_cast<std::size_t>(m);
    const WallEquilibrium eq = equilibrium_wall(box, beta, m);
    rep.l_eq[mi] = eq;

    double log_zm_eq, log_z_eq;
    if (eq.at_boundary) {
      // wall reaches the box end: only the m-sector survives, Z(l_eq) = Z_m(l_eq)
      // equals the full-length partition function (quasi-static removal limit)
      log_zm_eq = log_z_full;
      log_z_eq = log_z_full;
    } else {
      const std::vector<double> lz_eq = log_sectors(box, eq.position, beta);
      log_zm_eq = lz_eq[mi];
      log_z_eq = logsumexp(lz_eq);
    }
    rep.p_star_m[mi] = std::exp(log_zm_eq - log_z_eq);

    rep.w_exp += rep.p_m[mi] * (log_zm_eq - lz_at_wall[mi]) / beta.value;
    rep.w_rem += rep.p_m[mi] * (log_z_full - log_z_eq) / beta.value;
    if (rep.p_m[mi] > 0.0)
      w_closed -= rep.p_m[mi] * std::log(rep.p_m[mi] / rep.p_star_m[mi]) / beta.value;
  }

  rep.w_tot = rep.w_ins + rep.w_exp + rep.w_rem;
  rep.w_tot_closed = w_closed;
  if (std::abs(rep.w_tot - rep.w_tot_closed) > 1e-9 * std::max(1.0, std::abs(rep.w_tot)))
    throw std::runtime_error("run_cycle: stage sum disagrees with closed form beyond 1e-9");
  return rep;
}

ClassicalStages classical_stage_decomposition(const BoxSpec& box, Beta beta) {
  if (box.n_particles != 1)
    throw std::domain_error("classical_stage_decomposition: defined for N = 1");
  const SzilardReport rep = run_cycle(box, WallConfig(0.5 * box.length, box), beta);
  ClassicalStages st;
  st.w_ins = rep.w_ins;
  st.w_exp = rep.w_exp;
  st.w_rem = rep.w_rem;
  const double log_z_half = segment_ensemble(box, 0.5 * box.length, 1, beta).log_z;
  const double log_z_full = segment_ensemble(box, box.length, 1, beta).log_z;
  st.delta = (log_z_full - log_z_half) / beta.value;
  if (std::abs(st.w_rem) > 1e-9)
    throw std::runtime_error("classical_stage_decomposition: W_rem deviates from 0");
  if (std::abs(st.w_ins + st.w_exp - kLn2 / beta.value) > 1e-9)
    throw std::runtime_error("classical_stage_decomposition: stage sum deviates from ln2/beta");
  return st;
}

double classical_szilard_work(Beta beta, int partitions) {
  if (partitions < 2) throw std::domain_error("classical_szilard_work: need at least 2 partitions");
  return -std::log(static_cast<double>(partitions)) / beta.value;
}

}  // namespace infotherm
