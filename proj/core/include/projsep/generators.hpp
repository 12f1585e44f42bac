#pragma once

#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "projsep/dataset.hpp"
#include "projsep/rng.hpp"
#include "projsep/types.hpp"

namespace projsep {

using CovariancePair = std::pair<SpdMatrix, SpdMatrix>;

/// Scaled inverse Wishart family: Sigma_k = df_k * IW(I_p, df_k).
/// Degrees of freedom are absolute (not multiples of p).
struct InverseWishartParams {
  double df_1 = 0.0;
  double df_2 = 0.0;
};

/// Latent low-dimension family. At most one of the share flags may be set.
struct LatentLowDimParams {
  bool share_q = false;
  bool share_theta = false;
  bool sparse_q = false;
  /// Probability that an entry of a sparse mixing matrix is non-zero.
  double sparse_density = 0.1;
};

/// Empirical covariances of a two-class dataset after column overlap.
struct EmpiricalCovParams {
  double gamma = 0.0;
  std::shared_ptr<const LabeledDataset> source;
};

enum class FamilyVariant { InverseWishart, LatentLowDim, EmpiricalCov };

struct FamilyConfig {
  int p = 0;
  std::variant<InverseWishartParams, LatentLowDimParams, EmpiricalCovParams> params;

  FamilyVariant variant() const { return static_cast<FamilyVariant>(params.index()); }
  /// Throws DegreesOfFreedomTooSmall / ConfigRejected.
  void validate() const;
};

/// Bartlett construction of W ~ Wishart(I_p, df), df > p - 1.
SpdMatrix sample_wishart(int p, double df, RngStream& rng);

/// Raw inverse Wishart IW(I_p, df): the inverse of sample_wishart(p, df).
SpdMatrix sample_inverse_wishart(int p, double df, RngStream& rng);

/// df * IW(I_p, df); requires df >= p.
SpdMatrix sample_scaled_inverse_wishart(int p, double df, RngStream& rng);

CovariancePair gen_iw_pair(int p, double df_1, double df_2, RngStream& rng);

/// Latent dimension max(2, round(p / 25)), ties rounded to even.
int latent_rank(int p);

/// Building blocks of a latent pair, exposed so that sharing can be checked.
struct LatentComponents {
  Matrix theta_1, theta_2;  ///< r x r
  Matrix q_1, q_2;          ///< r x p
  Matrix noise_1, noise_2;  ///< p x p
  CovariancePair pair;
};

/// Sigma_k = (r + 1) Q_k^t Theta_k Q_k + 0.02 p M_k with Theta_k ~ IW(I_r, r + 1)
/// and M_k ~ IW(I_p, 2p) (both raw, unscaled).
LatentComponents gen_latent_components(int p, const LatentLowDimParams& config, RngStream& rng);
CovariancePair gen_latent_pair(int p, const LatentLowDimParams& config, RngStream& rng);

struct ColumnOverlap {
  Matrix x_1;                        ///< m x p, with replaced columns
  Matrix x_2;                        ///< m x p, first half of the shuffled x_2 rows
  std::vector<int> replaced_columns; ///< sorted
  std::vector<int> x_1_rows;         ///< source rows of x_1 (in order)
};

/// Splits x_2's rows into disjoint halves of m = min(floor(n_2 / 2), n_1)
/// rows, subsamples m rows of x_1, and overwrites floor(gamma p) randomly
/// chosen columns of the x_1 subsample with the second x_2 half.
/// Throws InsufficientRows, DimensionMismatch, ConfigRejected.
ColumnOverlap column_overlap(const Matrix& x_1, const Matrix& x_2, double gamma, RngStream& rng);

/// (1/n_k) X_k^t X_k after centering each class; PSD (may be rank deficient).
CovariancePair empirical_cov_pair(const Matrix& x_1, const Matrix& x_2);

/// n rows of mean + L z with z iid N(0, I). Throws NotPositiveDefinite.
Matrix sample_gaussian(const Vector& mean, const SpdMatrix& cov, int n, RngStream& rng);

/// Same, with a caller-supplied factor (any F with F F^t = Sigma).
Matrix sample_gaussian_factor(const Vector& mean, const Matrix& factor, int n, RngStream& rng);

/// A factor F F^t = cov that also works for rank-deficient covariances
/// (Cholesky when it exists, otherwise the clamped eigen square root).
Matrix covariance_factor(const SpdMatrix& cov);

/// The empirical family's data step: p random source columns, then
/// column_overlap of the two classes. generate_pair returns the covariances
/// of exactly this draw.
ColumnOverlap draw_empirical_overlap(int p, const EmpiricalCovParams& params, RngStream& rng);

/// Draws one covariance pair from a family.
CovariancePair generate_pair(const FamilyConfig& family, RngStream& rng);

}  // namespace projsep
