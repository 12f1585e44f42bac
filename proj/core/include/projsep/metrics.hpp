#pragma once

#include <span>

#include "projsep/types.hpp"

namespace projsep {

/// Chernoff distance and the associated bound for one exponent s.
struct OverlapReport {
  double distance = 0.0;  ///< delta(s) >= 0
  double overlap = 0.5;   ///< sqrt(pi_1 pi_2) * exp(-distance) when s = 1/2
  double s = 0.5;
};

/// delta(s) = s(1-s)/2 d^t B^-1 d + 1/2 [ln det B - s ln det S1 - (1-s) ln det S2]
/// with B = s S1 + (1-s) S2 and d = mu_2 - mu_1. All log-determinants go
/// through Cholesky. Throws SingularBlend if B is not PD.
double chernoff_distance(const TwoClassGaussian& model, double s);

/// Chernoff distance at s = 1/2, evaluated from its own closed form.
double bhattacharyya_distance(const TwoClassGaussian& model);

/// Bhattacharyya overlap sqrt(pi_1 pi_2) exp(-delta(1/2)).
double bhattacharyya_overlap(const TwoClassGaussian& model);

OverlapReport bhattacharyya_report(const TwoClassGaussian& model);

/// Overlap of the projected model (pi_k, W^t mu_k, W^t Sigma_k W).
double embedded_overlap(const TwoClassGaussian& model, const ProjectionMatrix& w);

/// Zero-mean variant that accepts rank-deficient ambient covariances
/// (empirical covariances with n < p); only the projected ones must be PD.
double embedded_overlap(const SpdMatrix& cov_1, const SpdMatrix& cov_2,
                        const ProjectionMatrix& w, double weight_1 = 0.5);

/// sqrt(pi_1 pi_2) * (prod_j (sqrt(l_j) + 1/sqrt(l_j)) / 2)^(-1/2).
/// Throws NonPositiveEigenvalue.
double optimal_overlap_closed_form(std::span<const double> eigenvalues, double weight_1,
                                   double weight_2);

}  // namespace projsep
