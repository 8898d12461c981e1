#include "infotherm/density.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace infotherm {

namespace {
constexpr double kHermTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kEigTol = 1e-12;
// weight this far below the top eigenvalue counts as outside the support
constexpr double kSupportTol = 1e-12;

std::vector<double> clamped_spectrum(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
  std::vector<double> eigs(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    double v = es.eigenvalues()(i);
    if (v < 1e-14) v = (v < -kEigTol) ? v : 0.0;  // clamp fp negatives, keep true violations
    eigs[static_cast<std::size_t>(i)] = v;
  }
  return eigs;
}
}  // namespace

DensityMatrix::DensityMatrix(CMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0)
    throw std::invalid_argument("DensityMatrix: matrix must be square and non-empty");
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kHermTol)
    throw std::invalid_argument("DensityMatrix: not Hermitian within 1e-12");
  m_ = 0.5 * (m_ + m_.adjoint().eval());  // symmetrise away roundoff
  if (std::abs(m_.trace().real() - 1.0) > kTraceTol || std::abs(m_.trace().imag()) > kTraceTol)
    throw std::invalid_argument("DensityMatrix: trace != 1 within 1e-12");
  eigs_ = clamped_spectrum(m_);
  for (double v : eigs_)
    if (v < -kEigTol) throw std::invalid_argument("DensityMatrix: negative eigenvalue");
}

DensityMatrix DensityMatrix::pure(const CVector& psi) {
  const double n2 = psi.squaredNorm();
  if (n2 <= 0.0) throw std::invalid_argument("DensityMatrix::pure: zero vector");
  CVector v = psi / std::sqrt(n2);
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::basis_state(int dim, int k) {
  CVector v = CVector::Zero(dim);
  v(k) = 1.0;
  return pure(v);
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return DensityMatrix(CMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::diagonal(const ProbDist& p) {
  const int d = static_cast<int>(p.size());
  CMatrix m = CMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = p[static_cast<std::size_t>(i)];
  return DensityMatrix(std::move(m));
}

bool is_unitary(const CMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const CMatrix id = CMatrix::Identity(u.rows(), u.cols());
  return (u * u.adjoint() - id).cwiseAbs().maxCoeff() <= tol;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(kron(a.matrix(), b.matrix()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> dims,
                            std::span<const int> keep) {
  long total = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("partial_trace: bad subsystem dimension");
    total *= d;
  }
  if (total != rho.dim()) throw std::invalid_argument("partial_trace: dimensions do not factor state");

  std::vector<bool> kept(dims.size(), false);
  long kept_dim = 1;
  for (int k : keep) {
    if (k < 0 || static_cast<std::size_t>(k) >= dims.size() || kept[static_cast<std::size_t>(k)])
      throw std::invalid_argument("partial_trace: bad keep list");
    kept[static_cast<std::size_t>(k)] = true;
    kept_dim *= dims[static_cast<std::size_t>(k)];
  }

  // strides of each factor in the row-major composite index
  const std::size_t nf = dims.size();
  std::vector<long> stride(nf, 1);
  for (std::size_t f = nf; f-- > 1;) stride[f - 1] = stride[f] * dims[f];

  // enumerate kept and traced multi-indices separately
  std::vector<std::size_t> keep_order(keep.begin(), keep.end());
  std::vector<std::size_t> traced;
  for (std::size_t f = 0; f < nf; ++f)
    if (!kept[f]) traced.push_back(f);

  auto offset = [&](const std::vector<std::size_t>& factors, long combo) {
    long off = 0;
    for (std::size_t idx = factors.size(); idx-- > 0;) {
      const std::size_t f = factors[idx];
      off += (combo % dims[f]) * stride[f];
      combo /= dims[f];
    }
    return off;
  };

  long traced_dim = 1;
  for (std::size_t f : traced) traced_dim *= dims[f];

  CMatrix out = CMatrix::Zero(kept_dim, kept_dim);
  for (long r = 0; r < kept_dim; ++r)
    for (long c = 0; c < kept_dim; ++c) {
      std::complex<double> s = 0.0;
      const long ro = offset(keep_order, r), co = offset(keep_order, c);
      for (long t = 0; t < traced_dim; ++t) {
        const long to = offset(traced, t);
        s += rho.matrix()(ro + to, co + to);
      }
      out(r, c) = s;
    }
  return DensityMatrix(std::move(out));
}

DensityMatrix evolve(const DensityMatrix& rho, const CMatrix& u) {
  if (u.rows() != rho.dim()) throw std::invalid_argument("evolve: dimension mismatch");
  if (!is_unitary(u)) throw std::invalid_argument("evolve: operator not unitary within 1e-10");
  return DensityMatrix(u * rho.matrix() * u.adjoint());
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (double v : rho.eigenvalues()) s -= xlnx(v);
  return s;
}

double relative_entropy(const DensityMatrix& sigma, const DensityMatrix& rho) {
  if (sigma.dim() != rho.dim()) throw std::invalid_argument("relative_entropy: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix());
  const double top = es.eigenvalues().maxCoeff();
  // tr(sigma ln rho) in rho's eigenbasis; weight on rho's null space => +inf
  double tr_sig_ln_rho = 0.0;
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    const double r = es.eigenvalues()(i);
    const CVector v = es.eigenvectors().col(i);
    const double w = std::real((v.adjoint() * sigma.matrix() * v)(0, 0));
    if (r <= top * kSupportTol || r <= 0.0) {
      if (w > 1e-10) return std::numeric_limits<double>::infinity();
      continue;
    }
    tr_sig_ln_rho += w * std::log(r);
  }
  return -von_neumann_entropy(sigma) - tr_sig_ln_rho;
}

double mutual_information_quantum(const DensityMatrix& rho_ab, int dim_a, int dim_b) {
  if (dim_a * dim_b != rho_ab.dim())
    throw std::invalid_argument("mutual_information_quantum: dims do not factor the state");
  const int dims[] = {dim_a, dim_b};
  const int ka[] = {0}, kb[] = {1};
  const DensityMatrix ra = partial_trace(rho_ab, dims, ka);
  const DensityMatrix rb = partial_trace(rho_ab, dims, kb);
  return von_neumann_entropy(ra) + von_neumann_entropy(rb) - von_neumann_entropy(rho_ab);
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("trace_distance: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(a.matrix() - b.matrix(), Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

DensityMatrix gibbs_state(const CMatrix& hamiltonian, Beta beta) {
  if (hamiltonian.rows() != hamiltonian.cols())
    throw std::invalid_argument("gibbs_state: Hamiltonian must be square");
  if ((hamiltonian - hamiltonian.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("gibbs_state: Hamiltonian not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hamiltonian);
  const double e0 = es.eigenvalues().minCoeff();
  Eigen::VectorXd w(hamiltonian.rows());
  if (beta.zero_temperature()) {
    for (Eigen::Index i = 0; i < w.size(); ++i)
      w(i) = (es.eigenvalues()(i) - e0 < 1e-12) ? 1.0 : 0.0;
  } else {
    for (Eigen::Index i = 0; i < w.size(); ++i)
      w(i) = std::exp(-beta.value * (es.eigenvalues()(i) - e0));
  }
  w /= w.sum();
  return DensityMatrix(es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint());
}

double noneq_free_energy(const DensityMatrix& rho, const CMatrix& hamiltonian, Beta beta) {
  if (hamiltonian.rows() != rho.dim())
    throw std::invalid_argument("noneq_free_energy: dimension mismatch");
  const double energy = std::real((rho.matrix() * hamiltonian).trace());
  return energy - von_neumann_entropy(rho) / beta.value;
}

CoarseGraining::CoarseGraining(std::vector<CMatrix> projectors) : p_(std::move(projectors)) {
  if (p_.empty()) throw std::invalid_argument("CoarseGraining: no projectors");
  const Eigen::Index d = p_.front().rows();
  CMatrix sum = CMatrix::Zero(d, d);
  for (const auto& p : p_) {
    if (p.rows() != d || p.cols() != d)
      throw std::invalid_argument("CoarseGraining: projector shape mismatch");
    if ((p * p - p).cwiseAbs().maxCoeff() > 1e-10 || (p - p.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
      throw std::invalid_argument("CoarseGraining: entry is not an orthogonal projector");
    sum += p;
  }
  for (std::size_t i = 0; i < p_.size(); ++i)
    for (std::size_t j = i + 1; j < p_.size(); ++j)
      if ((p_[i] * p_[j]).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("CoarseGraining: projectors not mutually orthogonal");
  if ((sum - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("CoarseGraining: projectors do not sum to identity");
}

CoarseGraining CoarseGraining::computational_basis(int dim) {
  std::vector<CMatrix> p;
  p.reserve(static_cast<std::size_t>(dim));
  for (int k = 0; k < dim; ++k) {
    CMatrix m = CMatrix::Zero(dim, dim);
    m(k, k) = 1.0;
    p.push_back(std::move(m));
  }
  return CoarseGraining(std::move(p));
}

double observational_entropy(const DensityMatrix& rho, const CoarseGraining& cg) {
  if (cg.projector(0).rows() != rho.dim())
    throw std::invalid_argument("observational_entropy: dimension mismatch");
  double s = 0.0;
  for (std::size_t x = 0; x < cg.size(); ++x) {
    const double px = std::real((cg.projector(x) * rho.matrix()).trace());
    if (px < 1e-14) continue;
    const double vx = std::real(cg.projector(x).trace());
    s += px * (-std::log(px) + std::log(vx));
  }
  return s;
}

CMatrix cnot_gate() {
  CMatrix u = CMatrix::Zero(4, 4);
  u(0, 0) = 1.0;
  u(1, 1) = 1.0;
  u(2, 3) = 1.0;
  u(3, 2) = 1.0;
  return u;
}

CMatrix swap_gate(int d) {
  CMatrix u = CMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) u(i * d + j, j * d + i) = 1.0;
  return u;
}

DensityMatrix bell_state() {
  CVector v = CVector::Zero(4);
  v(0) = 1.0 / std::sqrt(2.0);
  v(3) = 1.0 / std::sqrt(2.0);
  return DensityMatrix::pure(v);
}

}  // namespace infotherm
