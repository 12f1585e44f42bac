#pragma once

#include "projsep/generators.hpp"

namespace projsep {

/// Sigma_1 = diag(alpha I_q, delta I_(p-q)), Sigma_2 = delta I_p. PCA and the
/// optimal projection both select the first q coordinates.
CovariancePair example_shared_subspace(int p, int q, double alpha, double delta);

/// Sigma_1 = diag(alpha I_q, delta I_(p-q)), Sigma_2 = alpha I_p, q <= p/2.
/// PCA keeps the first q coordinates, where both classes coincide.
CovariancePair example_disjoint_subspace(int p, int q, double alpha, double delta);

}  // namespace projsep
