#pragma once

#include <vector>

#include "projsep/dataset.hpp"
#include "projsep/rng.hpp"
#include "projsep/types.hpp"

namespace projsep {

/// Generalized eigenpair: cov_2 phi = value * cov_1 phi.
struct EigPair {
  double value = 0.0;
  Vector vector;
  int index = 0;  ///< position in the solver's ascending order
};

/// Leading q unit eigenvectors of the mixture covariance (Sigma_1 + Sigma_2,
/// or the pooled sample covariance). Eigenvalue ties go to the lower solver
/// index; each column's largest-magnitude entry is made positive.
ProjectionMatrix pca_projection(const SpdMatrix& mixture_cov, int q);

/// iid N(0, 1) entries, redrawn until rank q (at most 100 attempts).
ProjectionMatrix random_projection(int p, int q, RngStream& rng);

/// Very sparse random projection: entries in {-p^(1/4), 0, +p^(1/4)} with
/// probabilities {1/(2 sqrt p), 1 - 1/sqrt p, 1/(2 sqrt p)}. Redrawn until
/// rank q; throws RankDeficientAfterRetries after 100 failures.
ProjectionMatrix sparse_random_projection(int p, int q, RngStream& rng);

/// All generalized eigenpairs of (cov_2, cov_1 + ridge I) by whitening:
/// cov_1 + ridge I = L L^t, eig(L^-1 cov_2 L^-t) = U diag(l) U^t, phi = L^-t u.
/// Returned in ascending eigenvalue order. Throws SingularAfterRidge.
std::vector<EigPair> generalized_eigenpairs(const SpdMatrix& cov_1, const SpdMatrix& cov_2,
                                            double ridge);

/// Indices into `pairs` of the q pairs with the largest l + 1/l, best first.
/// Ties keep the lower solver index.
std::vector<int> select_bhattacharyya(const std::vector<EigPair>& pairs, int q);

struct OptimalProjection {
  ProjectionMatrix projection;
  std::vector<EigPair> selected;  ///< retained pairs, best first
  std::vector<double> spectrum;   ///< all generalized eigenvalues, ascending
};

/// Bhattacharyya-optimal projection with eigen-order metadata. Columns of
/// `projection` are an orthonormal basis of span(phi_1..phi_q), ordered so
/// that the leading k columns span the best k eigenvectors.
OptimalProjection bhattacharyya_optimal(const SpdMatrix& cov_1, const SpdMatrix& cov_2, int q,
                                        double ridge);

ProjectionMatrix bhattacharyya_optimal_projection(const SpdMatrix& cov_1, const SpdMatrix& cov_2,
                                                  int q, double ridge);

/// 1e-6 * trace(cov)/p if `cov` is numerically rank deficient (smallest
/// eigenvalue <= 1e-10 * largest), else 0.
double default_ridge(const SpdMatrix& cov);

struct ClassStatistics {
  SpdMatrix cov_1;
  SpdMatrix cov_2;
  double weight_1;
  double weight_2;
  Vector mean_1;
  Vector mean_2;
};

/// Per-class mean and covariance (divisor n_k) and class weights n_k / n.
/// Throws EmptyClass.
ClassStatistics empirical_covariances(const LabeledDataset& data);

/// Covariance of all rows about the grand mean, divisor n. The empirical
/// stand-in for Sigma_1 + Sigma_2 up to scale.
SpdMatrix pooled_covariance(const Matrix& x);

}  // namespace projsep
