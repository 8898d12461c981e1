#include "infotherm/landauer.hpp"

#include <cmath>
#include <cstdio>

namespace infotherm {

namespace {
constexpr int kMaxBathDim = 64;
}

CMatrix hamiltonian_matrix(const SpectrumModel& h) {
  const long d = h.total_states();
  CMatrix m = CMatrix::Zero(d, d);
  long k = 0;
  for (std::size_t i = 0; i < h.num_levels(); ++i)
    for (long g = 0; g < h.degeneracy(i); ++g) m(k, k) = h.level(i), ++k;
  return m;
}

ErasureSetup::ErasureSetup(DensityMatrix rho_s, SpectrumModel h_b, Beta b, CMatrix u)
    : system_state(std::move(rho_s)),
      bath_hamiltonian(std::move(h_b)),
      beta(b),
      joint_unitary(std::move(u)) {
  const long bath_dim = bath_hamiltonian.total_states();
  if (bath_dim > kMaxBathDim)
    throw std::invalid_argument("ErasureSetup: bath dimension beyond the exact-diagonalisation cap (64)");
  if (joint_unitary.rows() != system_state.dim() * bath_dim)
    throw std::invalid_argument("ErasureSetup: unitary dimension != dim(S)*dim(B)");
  if (!is_unitary(joint_unitary))
    throw std::invalid_argument("ErasureSetup: joint operator not unitary within 1e-10");
}

Ledger run_erasure(const ErasureSetup& setup) {
  const CMatrix h_b = hamiltonian_matrix(setup.bath_hamiltonian);
  const DensityMatrix gamma_b = gibbs_state(h_b, setup.beta);
  const DensityMatrix joint0 = tensor(setup.system_state, gamma_b);
  const DensityMatrix joint1 = evolve(joint0, setup.joint_unitary);

  const int dims[] = {setup.system_state.dim(), static_cast<int>(h_b.rows())};
  const int ks[] = {0}, kb[] = {1};
  const DensityMatrix sigma_s = partial_trace(joint1, dims, ks);
  const DensityMatrix sigma_b = partial_trace(joint1, dims, kb);

  Ledger led;
  led.delta_s_system = von_neumann_entropy(sigma_s) - von_neumann_entropy(setup.system_state);
  led.delta_s_bath = von_neumann_entropy(sigma_b) - von_neumann_entropy(gamma_b);
  led.heat_to_bath = std::real((h_b * (sigma_b.matrix() - gamma_b.matrix())).trace());
  led.mutual_info = von_neumann_entropy(sigma_s) + von_neumann_entropy(sigma_b) -
                    von_neumann_entropy(joint1);
  led.rel_entropy_bath = relative_entropy(sigma_b, gamma_b);
  led.entropy_production = setup.beta.value * led.heat_to_bath + led.delta_s_system;

  const double residual = led.equality_residual(setup.beta.value);
  if (std::abs(residual) > 1e-9)
    throw std::runtime_error("run_erasure: heat-exchange equality residual " +
                             std::to_string(residual) + " exceeds 1e-9");
  if (setup.beta.value * led.heat_to_bath < -led.delta_s_system - 1e-9)
    throw std::runtime_error("run_erasure: Landauer bound violated");
  return led;
}

double swap_erasure_cost(double gap_e, Beta beta) {
  if (gap_e < 0.0) throw std::domain_error("swap_erasure_cost: gap must be >= 0");
  if (beta.zero_temperature()) return 0.5 * gap_e;  // bath starts in its ground state
  const double w = std::exp(-beta.value * gap_e);
  return (0.5 - w / (1.0 + w)) * gap_e;
}

double landauer_minimum(double delta_s_system, Beta beta) {
  if (beta.zero_temperature()) return 0.0;
  return -delta_s_system / beta.value;
}

SemwReport semw_cycle_check(const SemwSetup& setup) {
  const CMatrix h_e = hamiltonian_matrix(setup.env_hamiltonian);
  const DensityMatrix gamma_e = gibbs_state(h_e, setup.beta);

  const double bat_purity = von_neumann_entropy(setup.battery);
  if (bat_purity > 1e-8)
    throw std::invalid_argument("semw_cycle_check: subsystem W broke the contract (initial battery not pure)");

  const DensityMatrix joint0 =
      tensor(tensor(setup.system, gamma_e), tensor(setup.memory, setup.battery));
  if (setup.joint_unitary.rows() != joint0.dim())
    throw std::invalid_argument("semw_cycle_check: unitary dimension mismatch");

  // energy preservation: [U, H_total] = 0 within 1e-8.  A one-level spectrum
  // stands for the trivial Hamiltonian e*I on a subsystem of any dimension.
  const int ds = setup.system.dim(), de = static_cast<int>(h_e.rows());
  const int dm = setup.memory.dim(), dw = setup.battery.dim();
  auto embedded = [](const SpectrumModel& h, int dim) -> CMatrix {
    if (h.total_states() == dim) return hamiltonian_matrix(h);
    if (h.total_states() == 1) return h.level(0) * CMatrix::Identity(dim, dim);
    throw std::invalid_argument("semw_cycle_check: subsystem Hamiltonian dimension mismatch");
  };
  const CMatrix h_s = embedded(setup.sys_hamiltonian, ds);
  const CMatrix h_m = embedded(setup.mem_hamiltonian, dm);
  const CMatrix h_w = embedded(setup.bat_hamiltonian, dw);
  auto eye = [](int d) { return CMatrix::Identity(d, d); };
  const CMatrix h_tot = kron(kron(h_s, eye(de)), kron(eye(dm), eye(dw))) +
                        kron(kron(eye(ds), h_e), kron(eye(dm), eye(dw))) +
                        kron(kron(eye(ds), eye(de)), kron(h_m, eye(dw))) +
                        kron(kron(eye(ds), eye(de)), kron(eye(dm), h_w));
  if ((setup.joint_unitary * h_tot - h_tot * setup.joint_unitary).cwiseAbs().maxCoeff() > 1e-8)
    throw std::invalid_argument("semw_cycle_check: unitary does not preserve total energy within 1e-8");

  const DensityMatrix joint1 = evolve(joint0, setup.joint_unitary);
  const int dims[] = {ds, de, dm, dw};
  const int k0[] = {0}, k1[] = {1}, k2[] = {2}, k3[] = {3};
  const DensityMatrix sig_s = partial_trace(joint1, dims, k0);
  const DensityMatrix sig_e = partial_trace(joint1, dims, k1);
  const DensityMatrix sig_m = partial_trace(joint1, dims, k2);
  const DensityMatrix sig_w = partial_trace(joint1, dims, k3);

  SemwReport rep;
  rep.delta_s_system = von_neumann_entropy(sig_s) - von_neumann_entropy(setup.system);
  rep.delta_s_env = von_neumann_entropy(sig_e) - von_neumann_entropy(gamma_e);
  rep.delta_s_memory = von_neumann_entropy(sig_m) - von_neumann_entropy(setup.memory);
  rep.delta_s_battery = von_neumann_entropy(sig_w) - von_neumann_entropy(setup.battery);
  rep.heat_to_env = std::real((h_e * (sig_e.matrix() - gamma_e.matrix())).trace());

  if (std::abs(rep.delta_s_system) > 1e-8)
    throw std::runtime_error("semw_cycle_check: subsystem S broke the contract (dS_S != 0)");
  if (std::abs(rep.delta_s_battery) > 1e-8)
    throw std::runtime_error("semw_cycle_check: subsystem W broke the contract (dS_W != 0)");

  rep.slack = rep.delta_s_memory + setup.beta.value * rep.heat_to_env;
  rep.inequality_holds = rep.delta_s_memory >= -setup.beta.value * rep.heat_to_env - 1e-9;
  return rep;
}

std::string ledger_csv_header() {
  return "delta_s_system,heat_to_bath,mutual_info,rel_entropy_bath,entropy_production,residual";
}

std::string ledger_csv_row(const Ledger& led, double beta) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g", led.delta_s_system,
                led.heat_to_bath, led.mutual_info, led.rel_entropy_bath, led.entropy_production,
                led.equality_residual(beta));
  return buf;
}

}  // namespace infotherm
