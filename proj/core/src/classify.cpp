#include "projsep/classify.hpp"

#include <cmath>
#include <string>
#include <thread>

#include "projsep/error.hpp"
#include "projsep/projections.hpp"

namespace projsep {

namespace {

// Relative eigenvalue floor below which an embedded covariance is treated as
// singular. Rank-deficient sample covariances land near 1e-16.
constexpr double kSingularFloor = 1e-12;

Matrix regularized(const Matrix& c, double ridge) {
  if (ridge <= 0.0) return c;
  const auto q = c.rows();
  const double scale = c.trace() / static_cast<double>(q);
  return c + ridge * (scale > 0.0 ? scale : 1.0) * Matrix::Identity(q, q);
}

[[noreturn]] void throw_singular(const Matrix& c, int label) {
  throw Error(ErrorKind::SingularEmbeddedCovariance,
              "embedded covariance of class " + std::to_string(label) + " (dimension " +
                  std::to_string(c.rows()) + ") is singular; reduce q or add samples",
              static_cast<int>(c.rows()));
}

void require_regular(const Matrix& c, int label) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(c, Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  if (!(hi > 0.0) || !(lo > kSingularFloor * hi)) throw_singular(c, label);
}

Vector squared_mahalanobis(const Matrix& y, const Vector& mean, const Eigen::LLT<Matrix>& chol) {
  const Matrix centered = (y.rowwise() - mean.transpose()).transpose();  // q x n
  const Matrix solved = chol.matrixL().solve(centered);
  return solved.colwise().squaredNorm().transpose();
}

}  // namespace

EmbeddedQda::EmbeddedQda(ProjectionMatrix w, double weight_1, Vector mean_1, Vector mean_2,
                         Matrix cov_1, Matrix cov_2, const QdaOptions& options)
    : w_(std::move(w)),
      weight_1_(weight_1),
      weight_2_(1.0 - weight_1),
      mean_1_(std::move(mean_1)),
      mean_2_(std::move(mean_2)),
      cov_1_(regularized(cov_1, options.ridge)),
      cov_2_(regularized(cov_2, options.ridge)),
      use_priors_(options.use_priors) {
  require_regular(cov_1_, 1);
  require_regular(cov_2_, 2);
  chol_1_.compute(cov_1_);
  chol_2_.compute(cov_2_);
  auto ld1 = cholesky_log_det(cov_1_);
  auto ld2 = cholesky_log_det(cov_2_);
  if (chol_1_.info() != Eigen::Success || !ld1) throw_singular(cov_1_, 1);
  if (chol_2_.info() != Eigen::Success || !ld2) throw_singular(cov_2_, 2);
  log_det_1_ = *ld1;
  log_det_2_ = *ld2;
}

EmbeddedQda EmbeddedQda::fit(const LabeledDataset& train, const ProjectionMatrix& w,
                             const QdaOptions& options) {
  if (train.p() != w.ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "training data has " + std::to_string(train.p()) +
                                                  " columns, projection expects " +
                                                  std::to_string(w.ambient_dim()));
  }
  // Projecting first and estimating in q dimensions gives the same
  // W^t mu_k and W^t S_k W as projecting the ambient estimates.
  const Matrix y = train.x * w.entries();
  const LabeledDataset embedded(y, train.labels);
  const auto stats = empirical_covariances(embedded);
  return EmbeddedQda(w, stats.weight_1, stats.mean_1, stats.mean_2, stats.cov_1.entries(),
                     stats.cov_2.entries(), options);
}

EmbeddedQda EmbeddedQda::from_model(const TwoClassGaussian& model, const ProjectionMatrix& w,
                                    const QdaOptions& options) {
  if (model.dim() != w.ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "model and projection disagree on dimension");
  }
  const Matrix& wm = w.entries();
  return EmbeddedQda(w, model.weight_1(), wm.transpose() * model.mean_1(),
                     wm.transpose() * model.mean_2(), congruence(model.cov_1().entries(), wm),
                     congruence(model.cov_2().entries(), wm), options);
}

double EmbeddedQda::prior_offset() const {
  return use_priors_ ? 2.0 * std::log(weight_1_ / weight_2_) : 0.0;
}

Vector EmbeddedQda::embedded_ratios(const Matrix& y) const {
  const Vector d1 = squared_mahalanobis(y, mean_1_, chol_1_);
  const Vector d2 = squared_mahalanobis(y, mean_2_, chol_2_);
  return (d1.array() + log_det_1_ - d2.array() - log_det_2_).matrix();
}

double EmbeddedQda::neg_log_likelihood_ratio(const Vector& x) const {
  const Matrix y = (w_.entries().transpose() * x).transpose();
  return embedded_ratios(y)(0);
}

int EmbeddedQda::predict(const Vector& x) const {
  return neg_log_likelihood_ratio(x) <= prior_offset() ? 1 : 2;
}

std::vector<int> EmbeddedQda::predict(const Matrix& x) const {
  if (x.cols() != w_.ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "data has " + std::to_string(x.cols()) +
                                                  " columns, classifier expects " +
                                                  std::to_string(w_.ambient_dim()));
  }
  const Vector r = embedded_ratios(x * w_.entries());
  const double offset = prior_offset();
  std::vector<int> out(static_cast<std::size_t>(r.size()));
  for (Eigen::Index i = 0; i < r.size(); ++i) out[static_cast<std::size_t>(i)] = r(i) <= offset ? 1 : 2;
  return out;
}

double oos_error(const EmbeddedQda& model, const LabeledDataset& val) {
  if (val.n() == 0) throw Error(ErrorKind::EmptyClass, "validation set is empty");
  const auto predicted = model.predict(val.x);
  long wrong = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) wrong += predicted[i] != val.labels[i];
  return static_cast<double>(wrong) / static_cast<double>(val.n());
}

RiskEstimate mc_bayes_risk(const TwoClassGaussian& model,
                           const std::optional<ProjectionMatrix>& w, long n_samples,
                           const RngStream& rng, int n_threads) {
  if (n_samples < 1) throw Error(ErrorKind::ConfigRejected, "n_samples must be >= 1");
  const int p = model.dim();
  const ProjectionMatrix proj = w ? *w : ProjectionMatrix::identity(p);
  const auto bayes = EmbeddedQda::from_model(model, proj);
  const Matrix l1 = model.cov_1().cholesky_factor();
  const Matrix l2 = model.cov_2().cholesky_factor();

  const long n_blocks = (n_samples + kRiskBlock - 1) / kRiskBlock;
  std::vector<long> errors(static_cast<std::size_t>(n_blocks), 0);

  auto run_block = [&](long b) {
    auto stream = rng.fork(static_cast<std::uint64_t>(b));
    const long size = std::min(kRiskBlock, n_samples - b * kRiskBlock);
    std::vector<int> labels(static_cast<std::size_t>(size));
    for (auto& z : labels) z = stream.uniform() < model.weight_1() ? 1 : 2;
    Matrix z(size, p);
    for (long i = 0; i < size; ++i)
      for (int j = 0; j < p; ++j) z(i, j) = stream.normal();
    Matrix x1 = z * l1.transpose();
    x1.rowwise() += model.mean_1().transpose();
    Matrix x2 = z * l2.transpose();
    x2.rowwise() += model.mean_2().transpose();
    Matrix x(size, p);
    for (long i = 0; i < size; ++i) {
      x.row(i) = labels[static_cast<std::size_t>(i)] == 1 ? x1.row(i) : x2.row(i);
    }
    const auto predicted = bayes.predict(x);
    long wrong = 0;
    for (long i = 0; i < size; ++i) {
      wrong += predicted[static_cast<std::size_t>(i)] != labels[static_cast<std::size_t>(i)];
    }
    errors[static_cast<std::size_t>(b)] = wrong;
  };

  const int threads = std::max(1, std::min<int>(n_threads, static_cast<int>(n_blocks)));
  if (threads == 1) {
    for (long b = 0; b < n_blocks; ++b) run_block(b);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (long b = t; b < n_blocks; b += threads) run_block(b);
      });
    }
    for (auto& th : pool) th.join();
  }

  long wrong = 0;
  for (long e : errors) wrong += e;
  RiskEstimate r;
  r.n_samples = n_samples;
  r.estimate = static_cast<double>(wrong) / static_cast<double>(n_samples);
  r.std_error = std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(n_samples));
  return r;
}

double reconstruction_error(const ProjectionMatrix& w, const SpdMatrix& s_1, const SpdMatrix& s_2,
                            const SpdMatrix& sigma_1, const SpdMatrix& sigma_2) {
  const int p = w.ambient_dim();
  if (s_1.dim() != p || s_2.dim() != p || sigma_1.dim() != p || sigma_2.dim() != p) {
    throw Error(ErrorKind::DimensionMismatch, "reconstruction error inputs disagree on dimension");
  }
  const Matrix& wm = w.entries();
  const double e1 = (wm.transpose() * (s_1.entries() - sigma_1.entries()) * wm).squaredNorm();
  const double e2 = (wm.transpose() * (s_2.entries() - sigma_2.entries()) * wm).squaredNorm();
  return 0.5 * (e1 + e2);
}

}  // namespace projsep
