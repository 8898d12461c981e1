#include "infotherm/random_states.hpp"

namespace infotherm {

namespace {
CMatrix ginibre(int dim, Rng& rng) {
  CMatrix g(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = std::complex<double>(rng.normal(), rng.normal());
  return g;
}
}  // namespace

CMatrix haar_unitary(int dim, Rng& rng) {
  const CMatrix g = ginibre(dim, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix the diagonal phases so the distribution is Haar, not QR-convention
  for (int i = 0; i < dim; ++i) {
    const std::complex<double> d = r(i, i);
    const double a = std::abs(d);
    q.col(i) *= (a > 0.0) ? d / a : 1.0;
  }
  return q;
}

DensityMatrix random_density(int dim, Rng& rng) {
  const CMatrix g = ginibre(dim, rng);
  CMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(std::move(m));
}

DensityMatrix random_pure(int dim, Rng& rng) {
  CVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = std::complex<double>(rng.normal(), rng.normal());
  return DensityMatrix::pure(v);
}

}  // namespace infotherm
