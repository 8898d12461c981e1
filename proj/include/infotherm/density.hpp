#ifndef INFOTHERM_DENSITY_HPP
#define INFOTHERM_DENSITY_HPP

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

#include "infotherm/common.hpp"
#include "infotherm/prob.hpp"

namespace infotherm {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Finite-dimensional quantum state.  Construction enforces Hermiticity
// (1e-12), positivity (eigenvalues >= -1e-12) and unit trace (1e-12);
// instances are immutable and safe to share across threads.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix m);

  static DensityMatrix pure(const CVector& psi);
  static DensityMatrix basis_state(int dim, int k);
  static DensityMatrix maximally_mixed(int dim);
  static DensityMatrix diagonal(const ProbDist& p);

  int dim() const { return static_cast<int>(m_.rows()); }
  const CMatrix& matrix() const { return m_; }

  // eigenvalues ascending, negatives below the 1e-14 clamp set to 0
  const std::vector<double>& eigenvalues() const { return eigs_; }

 private:
  CMatrix m_;
  std::vector<double> eigs_;
};

bool is_unitary(const CMatrix& u, double tol = 1e-10);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
CMatrix kron(const CMatrix& a, const CMatrix& b);

// Trace out everything not in `keep` from a state on a tensor product with
// subsystem dimensions `dims` (factor 0 = leftmost/slowest index).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> dims,
                            std::span<const int> keep);

// U rho U^dag; rejects non-unitary U (1e-10)
DensityMatrix evolve(const DensityMatrix& rho, const CMatrix& u);

double von_neumann_entropy(const DensityMatrix& rho);

// S(sigma || rho) = -S(sigma) - tr(sigma ln rho); +inf when supp(sigma) is
// not contained in supp(rho) (Klein: always >= 0)
double relative_entropy(const DensityMatrix& sigma, const DensityMatrix& rho);

// S(rho_A) + S(rho_B) - S(rho_AB) via partial traces
double mutual_information_quantum(const DensityMatrix& rho_ab, int dim_a, int dim_b);

double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

// e^{-beta H}/Z for a Hermitian matrix Hamiltonian
DensityMatrix gibbs_state(const CMatrix& hamiltonian, Beta beta);

// F(rho) = tr(rho H) - S(rho)/beta
double noneq_free_energy(const DensityMatrix& rho, const CMatrix& hamiltonian, Beta beta);

// Complete set of mutually orthogonal projectors (sum = identity, 1e-10).
class CoarseGraining {
 public:
  explicit CoarseGraining(std::vector<CMatrix> projectors);
  static CoarseGraining computational_basis(int dim);

  std::size_t size() const { return p_.size(); }
  const CMatrix& projector(std::size_t i) const { return p_[i]; }

 private:
  std::vector<CMatrix> p_;
};

// S_obs = sum_x p_x (-ln p_x + ln V_x), p_x = tr(P_x rho), V_x = tr(P_x)
double observational_entropy(const DensityMatrix& rho, const CoarseGraining& cg);

// common gates/states used by the demos and tests
CMatrix cnot_gate();           // control = leftmost qubit
CMatrix swap_gate(int dim_a);  // swap of two dim_a-dimensional factors
DensityMatrix bell_state();

}  // namespace infotherm

#endif
