#ifndef INFOTHERM_RANDOM_STATES_HPP
#define INFOTHERM_RANDOM_STATES_HPP

#include "infotherm/density.hpp"
#include "infotherm/rng.hpp"

namespace infotherm {

// Haar-distributed unitary: QR of a Ginibre matrix with the phase fix.
CMatrix haar_unitary(int dim, Rng& rng);

// full-rank random state G G^dag / tr(G G^dag), G Ginibre
DensityMatrix random_density(int dim, Rng& rng);

DensityMatrix random_pure(int dim, Rng& rng);

}  // namespace infotherm

#endif
