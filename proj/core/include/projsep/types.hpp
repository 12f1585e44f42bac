#pragma once

#include <Eigen/Dense>

#include <optional>

namespace projsep {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Symmetric positive semi-definite matrix (a covariance).
///
/// Construction symmetrizes the input as (A + A^t) / 2. The relaxed
/// constructor accepts rank-deficient matrices whose smallest eigenvalue is
/// at least -1e-8 times the largest; the strict constructor additionally
/// requires a Cholesky factorization to exist.
class SpdMatrix {
 public:
  /// Relaxed (PSD) constructor. Throws NotSquare or NotPositiveDefinite.
  static SpdMatrix make(const Matrix& raw);
  /// Strict-PD constructor. Throws NotSquare or NotPositiveDefinite.
  static SpdMatrix make_strict(const Matrix& raw);
  static SpdMatrix identity(int dim);

  int dim() const noexcept { return static_cast<int>(entries_.rows()); }
  const Matrix& entries() const noexcept { return entries_; }
  bool strict() const noexcept { return strict_; }

  /// Lower Cholesky factor L with L L^t = A. Throws NotPositiveDefinite.
  Matrix cholesky_factor() const;
  /// Sum of log-eigenvalues computed through the Cholesky diagonal.
  double log_det() const;

  bool operator==(const SpdMatrix& other) const {
    return strict_ == other.strict_ && entries_ == other.entries_;
  }

 private:
  SpdMatrix(Matrix entries, bool strict) : entries_(std::move(entries)), strict_(strict) {}

  Matrix entries_;
  bool strict_ = false;
};

/// p x q matrix of rank q used as x -> W^t x.
class ProjectionMatrix {
 public:
  /// Validates rank (smallest singular value > 1e-10 * largest) and, when
  /// `orthonormal_columns` is set, ||W^t W - I||_inf <= 1e-10.
  static ProjectionMatrix make(const Matrix& entries, bool orthonormal_columns);
  static ProjectionMatrix identity(int dim);

  int ambient_dim() const noexcept { return static_cast<int>(entries_.rows()); }
  int embed_dim() const noexcept { return static_cast<int>(entries_.cols()); }
  const Matrix& entries() const noexcept { return entries_; }
  bool orthonormal_columns() const noexcept { return orthonormal_; }

  /// First `q` columns; keeps the orthonormality flag.
  ProjectionMatrix leading(int q) const;

 private:
  ProjectionMatrix(Matrix entries, bool orthonormal)
      : entries_(std::move(entries)), orthonormal_(orthonormal) {}

  Matrix entries_;
  bool orthonormal_ = false;
};

/// Two-class Gaussian mixture (weight_1, mean_1, cov_1; 1 - weight_1, mean_2, cov_2).
class TwoClassGaussian {
 public:
  /// Covariances are required to be strict PD.
  TwoClassGaussian(double weight_1, Vector mean_1, Vector mean_2, SpdMatrix cov_1,
                   SpdMatrix cov_2);

  /// Balanced, zero-mean model.
  static TwoClassGaussian centered(SpdMatrix cov_1, SpdMatrix cov_2, double weight_1 = 0.5);

  int dim() const noexcept { return cov_1_.dim(); }
  double weight_1() const noexcept { return weight_1_; }
  double weight_2() const noexcept { return weight_2_; }
  const Vector& mean_1() const noexcept { return mean_1_; }
  const Vector& mean_2() const noexcept { return mean_2_; }
  const SpdMatrix& cov_1() const noexcept { return cov_1_; }
  const SpdMatrix& cov_2() const noexcept { return cov_2_; }

  /// Parameters of W^t x: (pi_k, W^t mu_k, W^t Sigma_k W). Throws
  /// DimensionMismatch, or SingularBlend if a projected covariance is not PD.
  TwoClassGaussian project(const ProjectionMatrix& w) const;

 private:
  double weight_1_;
  double weight_2_;
  Vector mean_1_;
  Vector mean_2_;
  SpdMatrix cov_1_;
  SpdMatrix cov_2_;
};

/// log det via Cholesky; nullopt when the factorization fails so callers can
/// raise their own error kind.
std::optional<double> cholesky_log_det(const Matrix& a);

/// Symmetrize W^t A W.
Matrix congruence(const Matrix& a, const Matrix& w);

}  // namespace projsep
