#ifndef INFOTHERM_LANDAUER_HPP
#define INFOTHERM_LANDAUER_HPP

#include <string>
#include <vector>

#include "infotherm/common.hpp"
#include "infotherm/density.hpp"
#include "infotherm/spectrum.hpp"

namespace infotherm {

// One unitary system-bath process: sigma_SB = U (rho_S x gamma_B) U^dag with
// the bath starting thermal at beta.  Bath dimension is capped at 64 so the
// exact-diagonalisation sweeps stay sub-second.
struct ErasureSetup {
  DensityMatrix system_state;
  SpectrumModel bath_hamiltonian;
  Beta beta;
  CMatrix joint_unitary;

  ErasureSetup(DensityMatrix rho_s, SpectrumModel h_b, Beta b, CMatrix u);
};

// Bookkeeping for one process; all entries in nats / natural energy units.
struct Ledger {
  double delta_s_system = 0.0;    // S(sigma_S) - S(rho_S)
  double delta_s_bath = 0.0;      // S(sigma_B) - S(gamma_B)
  double heat_to_bath = 0.0;      // tr[H_B (sigma_B - gamma_B)]
  double mutual_info = 0.0;       // I(S:B) in sigma_SB
  double rel_entropy_bath = 0.0;  // S(sigma_B || gamma_B)
  double entropy_production = 0.0;  // beta*Q_B + dS_S

  // beta*Q_B + dS_S - I - S(sigma_B||gamma_B); zero up to roundoff for every
  // unitary process with an initially thermal, uncorrelated bath
  double equality_residual(double beta) const {
    return beta * heat_to_bath + delta_s_system - mutual_info - rel_entropy_bath;
  }
};

// Evaluates the heat-exchange equality
//   beta dQ_B = -dS_S + I(S:B) + S(sigma_B||gamma_B)
// by exact linear algebra and verifies it to 1e-9 together with the bound
// beta dQ_B >= -dS_S - 1e-9; violation of either throws (it would mean the
// arithmetic itself is broken, not the physics).
Ledger run_erasure(const ErasureSetup& setup);

// Work cost of erasing a maximally mixed qubit by swapping with a thermal
// qubit of gap E: W = (1/2 - e^{-beta E}/Z) E, Z = 1 + e^{-beta E}.
double swap_erasure_cost(double gap_e, Beta beta);

// Least heat -dS_S/beta compatible with the bound; ln2/beta for a bit reset.
double landauer_minimum(double delta_s_system, Beta beta);

// Four-partite check of dS_M >= -beta Q_E for a cyclic protocol
// (order of factors: S, E, M, W).
struct SemwSetup {
  DensityMatrix system;   // S: returns to its initial entropy
  SpectrumModel env_hamiltonian;  // E starts thermal at beta
  Beta beta;
  DensityMatrix memory;   // M
  DensityMatrix battery;  // W: ideal work reservoir, pure before and after
  CMatrix joint_unitary;  // must commute with H_total within 1e-8
  // Hamiltonians of S, M, W as diagonal spectra; zero spectra allowed
  SpectrumModel sys_hamiltonian = SpectrumModel::single_level(0.0);
  SpectrumModel mem_hamiltonian = SpectrumModel::single_level(0.0);
  SpectrumModel bat_hamiltonian = SpectrumModel::single_level(0.0);
};

struct SemwReport {
  double delta_s_system = 0.0;
  double delta_s_env = 0.0;
  double delta_s_memory = 0.0;
  double delta_s_battery = 0.0;
  double heat_to_env = 0.0;   // Q_E = tr[H_E (sigma_E - gamma_E)]
  double slack = 0.0;         // dS_M + beta*Q_E
  bool inequality_holds = false;
};

// Throws with the offending subsystem named when a precondition fails
// (dS_S or dS_W nonzero beyond 1e-8, non-unitary U, U not energy-preserving).
SemwReport semw_cycle_check(const SemwSetup& setup);

// diagonal matrix Hamiltonian from a spectrum (degeneracies expanded)
CMatrix hamiltonian_matrix(const SpectrumModel& h);

std::string ledger_csv_header();
std::string ledger_csv_row(const Ledger& ledger, double beta);

}  // namespace infotherm

#endif
