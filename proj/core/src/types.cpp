#include "projsep/types.hpp"

#include <cmath>
#include <string>

#include "projsep/error.hpp"

namespace projsep {

namespace {

constexpr double kPsdTolerance = 1e-8;
constexpr double kRankTolerance = 1e-10;
constexpr double kOrthonormalTolerance = 1e-10;

Matrix symmetrized(const Matrix& raw) {
  if (raw.rows() != raw.cols()) {
    throw Error(ErrorKind::NotSquare, "matrix is " + std::to_string(raw.rows()) + "x" +
                                          std::to_string(raw.cols()));
  }
  Matrix sym = (raw + raw.transpose()) / 2.0;
  return sym;
}

}  // namespace

std::optional<double> cholesky_log_det(const Matrix& a) {
  Eigen::LLT<Matrix> llt(a);
  if (llt.info() != Eigen::Success) return std::nullopt;
  const auto diag = llt.matrixLLT().diagonal();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < diag.size(); ++i) {
    if (!(diag(i) > 0.0)) return std::nullopt;
    sum += std::log(diag(i));
  }
  return 2.0 * sum;
}

Matrix congruence(const Matrix& a, const Matrix& w) {
  Matrix c = w.transpose() * a * w;
  return (c + c.transpose()) / 2.0;
}

SpdMatrix SpdMatrix::make(const Matrix& raw) {
  Matrix sym = symmetrized(raw);
  if (sym.size() == 0) {
    throw Error(ErrorKind::NotPositiveDefinite, "empty matrix", 0);
  }
  if (!sym.allFinite()) {
    throw Error(ErrorKind::NotPositiveDefinite, "non-finite entries",
                static_cast<int>(sym.rows()));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(sym, Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  if (lo < -kPsdTolerance * std::max(hi, 0.0)) {
    throw Error(ErrorKind::NotPositiveDefinite,
                "smallest eigenvalue " + std::to_string(lo) + " below PSD tolerance",
                static_cast<int>(sym.rows()));
  }
  return SpdMatrix(std::move(sym), false);
}

SpdMatrix SpdMatrix::make_strict(const Matrix& raw) {
  Matrix sym = symmetrized(raw);
  if (sym.size() == 0 || !sym.allFinite() || !cholesky_log_det(sym)) {
    throw Error(ErrorKind::NotPositiveDefinite, "Cholesky factorization failed",
                static_cast<int>(sym.rows()));
  }
  return SpdMatrix(std::move(sym), true);
}

SpdMatrix SpdMatrix::identity(int dim) {
  return SpdMatrix(Matrix::Identity(dim, dim), true);
}

Matrix SpdMatrix::cholesky_factor() const {
  Eigen::LLT<Matrix> llt(entries_);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorKind::NotPositiveDefinite, "Cholesky factorization failed", dim());
  }
  return llt.matrixL();
}

double SpdMatrix::log_det() const {
  auto ld = cholesky_log_det(entries_);
  if (!ld) throw Error(ErrorKind::NotPositiveDefinite, "log-determinant of a singular matrix", dim());
  return *ld;
}

ProjectionMatrix ProjectionMatrix::make(const Matrix& entries, bool orthonormal_columns) {
  const auto p = entries.rows();
  const auto q = entries.cols();
  if (q < 1 || q > p) {
    throw Error(ErrorKind::QExceedsP,
                "embedding dimension " + std::to_string(q) + " for ambient " + std::to_string(p));
  }
  if (!entries.allFinite()) {
    throw Error(ErrorKind::InternalError, "projection has non-finite entries");
  }
  Eigen::JacobiSVD<Matrix> svd(entries);
  const auto& sv = svd.singularValues();
  if (!(sv(q - 1) > kRankTolerance * sv(0))) {
    throw Error(ErrorKind::RankDeficientAfterRetries,
                "projection is not of full column rank " + std::to_string(q));
  }
  if (orthonormal_columns) {
    const Matrix gram = entries.transpose() * entries - Matrix::Identity(q, q);
    if (gram.cwiseAbs().maxCoeff() > kOrthonormalTolerance) {
      throw Error(ErrorKind::InternalError, "columns flagged orthonormal but W^t W != I");
    }
  }
  return ProjectionMatrix(entries, orthonormal_columns);
}

ProjectionMatrix ProjectionMatrix::identity(int dim) {
  return ProjectionMatrix(Matrix::Identity(dim, dim), true);
}

ProjectionMatrix ProjectionMatrix::leading(int q) const {
  if (q < 1 || q > embed_dim()) {
    throw Error(ErrorKind::QExceedsP, "leading(" + std::to_string(q) + ") of a rank-" +
                                          std::to_string(embed_dim()) + " projection");
  }
  return ProjectionMatrix(entries_.leftCols(q), orthonormal_);
}

TwoClassGaussian::TwoClassGaussian(double weight_1, Vector mean_1, Vector mean_2,
                                   SpdMatrix cov_1, SpdMatrix cov_2)
    : weight_1_(weight_1),
      weight_2_(1.0 - weight_1),
      mean_1_(std::move(mean_1)),
      mean_2_(std::move(mean_2)),
      cov_1_(std::move(cov_1)),
      cov_2_(std::move(cov_2)) {
  if (!(weight_1 > 0.0 && weight_1 < 1.0)) {
    throw Error(ErrorKind::ConfigRejected, "class weight must lie in (0, 1)");
  }
  const auto p = cov_1_.dim();
  if (cov_2_.dim() != p || mean_1_.size() != p || mean_2_.size() != p) {
    throw Error(ErrorKind::DimensionMismatch, "model parameters disagree on dimension");
  }
  if (!cov_1_.strict() || !cov_2_.strict()) {
    throw Error(ErrorKind::NotPositiveDefinite, "model covariances must be strictly PD", p);
  }
}

TwoClassGaussian TwoClassGaussian::centered(SpdMatrix cov_1, SpdMatrix cov_2, double weight_1) {
  const int p = cov_1.dim();
  return TwoClassGaussian(weight_1, Vector::Zero(p), Vector::Zero(p), std::move(cov_1),
                          std::move(cov_2));
}

TwoClassGaussian TwoClassGaussian::project(const ProjectionMatrix& w) const {
  if (w.ambient_dim() != dim()) {
    throw Error(ErrorKind::DimensionMismatch, "projection ambient dimension " +
                                                  std::to_string(w.ambient_dim()) +
                                                  " vs model dimension " + std::to_string(dim()));
  }
  const Matrix& wm = w.entries();
  auto project_cov = [&](const SpdMatrix& c) {
    try {
      return SpdMatrix::make_strict(congruence(c.entries(), wm));
    } catch (const Error&) {
      throw Error(ErrorKind::SingularBlend, "projected covariance is not positive definite",
                  w.embed_dim());
    }
  };
  return TwoClassGaussian(weight_1_, wm.transpose() * mean_1_, wm.transpose() * mean_2_,
                          project_cov(cov_1_), project_cov(cov_2_));
}

}  // namespace projsep
