#include "projsep/metrics.hpp"

#include <cmath>
#include <string>

#include "projsep/error.hpp"

namespace projsep {

namespace {

double checked_log_det(const Matrix& m) {
  auto ld = cholesky_log_det(m);
  if (!ld) {
    throw Error(ErrorKind::SingularBlend,
                "covariance blend of dimension " + std::to_string(m.rows()) +
                    " is not positive definite",
                static_cast<int>(m.rows()));
  }
  return *ld;
}

double overlap_from_distance(double distance, double w1, double w2) {
  return std::sqrt(w1 * w2) * std::exp(-distance);
}

}  // namespace

double chernoff_distance(const TwoClassGaussian& model, double s) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw Error(ErrorKind::ConfigRejected, "Chernoff exponent must lie in [0, 1]");
  }
  const Matrix& s1 = model.cov_1().entries();
  const Matrix& s2 = model.cov_2().entries();
  const Matrix blend = s * s1 + (1.0 - s) * s2;

  Eigen::LLT<Matrix> llt(blend);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorKind::SingularBlend,
                "s*S1 + (1-s)*S2 is not positive definite (dim " + std::to_string(blend.rows()) + ")",
                static_cast<int>(blend.rows()));
  }
  const Vector d = model.mean_2() - model.mean_1();
  const double quad = d.dot(llt.solve(d));
  const double log_det_blend = checked_log_det(blend);
  const double log_term = log_det_blend - s * model.cov_1().log_det() -
                          (1.0 - s) * model.cov_2().log_det();
  const double delta = 0.5 * s * (1.0 - s) * quad + 0.5 * log_term;
  // Rounding can push an exact zero slightly negative.
  return std::max(delta, 0.0);
}

double bhattacharyya_distance(const TwoClassGaussian& model) {
  const Matrix avg = (model.cov_1().entries() + model.cov_2().entries()) / 2.0;
  Eigen::LLT<Matrix> llt(avg);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorKind::SingularBlend, "(S1 + S2)/2 is not positive definite",
                static_cast<int>(avg.rows()));
  }
  const Vector d = model.mean_2() - model.mean_1();
  const double mean_term = d.dot(llt.solve(d)) / 8.0;
  const double cov_term =
      0.5 * (checked_log_det(avg) - 0.5 * (model.cov_1().log_det() + model.cov_2().log_det()));
  return std::max(mean_term + cov_term, 0.0);
}

double bhattacharyya_overlap(const TwoClassGaussian& model) {
  return overlap_from_distance(bhattacharyya_distance(model), model.weight_1(), model.weight_2());
}

OverlapReport bhattacharyya_report(const TwoClassGaussian& model) {
  OverlapReport r;
  r.s = 0.5;
  r.distance = bhattacharyya_distance(model);
  r.overlap = overlap_from_distance(r.distance, model.weight_1(), model.weight_2());
  return r;
}

double embedded_overlap(const TwoClassGaussian& model, const ProjectionMatrix& w) {
  return bhattacharyya_overlap(model.project(w));
}

double embedded_overlap(const SpdMatrix& cov_1, const SpdMatrix& cov_2,
                        const ProjectionMatrix& w, double weight_1) {
  if (cov_1.dim() != cov_2.dim() || w.ambient_dim() != cov_1.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "covariances and projection disagree on dimension");
  }
  const Matrix e1 = congruence(cov_1.entries(), w.entries());
  const Matrix e2 = congruence(cov_2.entries(), w.entries());
  const double ld1 = checked_log_det(e1);
  const double ld2 = checked_log_det(e2);
  const double ld_avg = checked_log_det((e1 + e2) / 2.0);
  const double delta = std::max(0.5 * (ld_avg - 0.5 * (ld1 + ld2)), 0.0);
  return overlap_from_distance(delta, weight_1, 1.0 - weight_1);
}

double optimal_overlap_closed_form(std::span<const double> eigenvalues, double weight_1,
                                   double weight_2) {
  double log_prod = 0.0;
  for (double lambda : eigenvalues) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
      throw Error(ErrorKind::NonPositiveEigenvalue,
                  "eigenvalue " + std::to_string(lambda) + " is not a positive real");
    }
    const double root = std::sqrt(lambda);
    log_prod += std::log((root + 1.0 / root) / 2.0);
  }
  return std::sqrt(weight_1 * weight_2) * std::exp(-0.5 * log_prod);
}

}  // namespace projsep
