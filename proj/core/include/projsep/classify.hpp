#pragma once

#include <optional>
#include <vector>

#include "projsep/dataset.hpp"
#include "projsep/rng.hpp"
#include "projsep/types.hpp"

namespace projsep {

struct QdaOptions {
  /// Include ln(pi_1 / pi_2) in the decision. Off gives the pure likelihood
  /// ratio of the nested-embedding analysis.
  bool use_priors = true;
  /// Opt-in regularization: adds ridge * trace(C)/q * I to each embedded
  /// covariance C. Zero keeps singular fits an error.
  double ridge = 0.0;
};

/// Gaussian likelihood-ratio classifier in the embedding x -> W^t x:
///   z(x) = argmax_k pi_k phi(W^t x; W^t mu_k, W^t Sigma_k W),
/// ties going to class 1.
class EmbeddedQda {
 public:
  /// Fit on labelled training rows. Throws EmptyClass, DimensionMismatch or
  /// SingularEmbeddedCovariance (q too large for the class sizes).
  static EmbeddedQda fit(const LabeledDataset& train, const ProjectionMatrix& w,
                         const QdaOptions& options = {});

  /// Oracle variant built from known population parameters.
  static EmbeddedQda from_model(const TwoClassGaussian& model, const ProjectionMatrix& w,
                                const QdaOptions& options = {});

  int predict(const Vector& x) const;
  std::vector<int> predict(const Matrix& x) const;

  /// -2 ln(phi_1 / phi_2) of the embedded densities (no priors).
  double neg_log_likelihood_ratio(const Vector& x) const;
  /// Vectorized neg_log_likelihood_ratio over the rows of already-embedded
  /// data (n x q).
  Vector embedded_ratios(const Matrix& y) const;
  /// 2 ln(pi_1 / pi_2) when priors are used, else 0. Class 1 iff
  /// neg_log_likelihood_ratio(x) <= prior_offset().
  double prior_offset() const;

  const ProjectionMatrix& projection() const noexcept { return w_; }
  double weight_1() const noexcept { return weight_1_; }
  double weight_2() const noexcept { return weight_2_; }
  const Vector& emb_mean(int k) const { return k == 1 ? mean_1_ : mean_2_; }
  const Matrix& emb_cov(int k) const { return k == 1 ? cov_1_ : cov_2_; }
  double log_det(int k) const { return k == 1 ? log_det_1_ : log_det_2_; }

 private:
  EmbeddedQda(ProjectionMatrix w, double weight_1, Vector mean_1, Vector mean_2, Matrix cov_1,
              Matrix cov_2, const QdaOptions& options);

  ProjectionMatrix w_;
  double weight_1_;
  double weight_2_;
  Vector mean_1_, mean_2_;
  Matrix cov_1_, cov_2_;
  Eigen::LLT<Matrix> chol_1_, chol_2_;
  double log_det_1_ = 0.0;
  double log_det_2_ = 0.0;
  bool use_priors_ = true;
};

/// Misclassification rate on validation rows. Throws DimensionMismatch.
double oos_error(const EmbeddedQda& model, const LabeledDataset& val);

struct RiskEstimate {
  double estimate = 0.0;
  double std_error = 0.0;  ///< sqrt(estimate (1 - estimate) / n_samples)
  long n_samples = 0;
};

/// Monte Carlo estimate of the embedded Bayes risk P(z*_W(x) != z).
/// Labels and ambient samples are drawn in blocks of `kRiskBlock`; block b
/// uses rng.fork(b), so the estimate does not depend on `n_threads`, and
/// calls with the same stream but different W reuse the same draws.
RiskEstimate mc_bayes_risk(const TwoClassGaussian& model,
                           const std::optional<ProjectionMatrix>& w, long n_samples,
                           const RngStream& rng, int n_threads = 1);

inline constexpr long kRiskBlock = 8192;

/// 1/2 sum_k ||W^t (S_k - Sigma_k) W||_F^2. Throws DimensionMismatch.
double reconstruction_error(const ProjectionMatrix& w, const SpdMatrix& s_1, const SpdMatrix& s_2,
                            const SpdMatrix& sigma_1, const SpdMatrix& sigma_2);

}  // namespace projsep
