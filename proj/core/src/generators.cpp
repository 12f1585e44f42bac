#include "projsep/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "projsep/error.hpp"

namespace projsep {

namespace {

Matrix bartlett_factor(int p, double df, RngStream& rng) {
  if (p < 1) throw Error(ErrorKind::DimensionMismatch, "dimension must be positive");
  if (!(df > p - 1)) {
    throw Error(ErrorKind::DegreesOfFreedomTooSmall,
                "df = " + std::to_string(df) + " must exceed p - 1 = " + std::to_string(p - 1));
  }
  Matrix a = Matrix::Zero(p, p);
  for (int i = 0; i < p; ++i) {
    a(i, i) = std::sqrt(rng.chi_squared(df - i));
    for (int j = 0; j < i; ++j) a(i, j) = rng.normal();
  }
  return a;
}

Matrix inverse_from_factor(const Matrix& a) {
  const int p = static_cast<int>(a.rows());
  const Matrix a_inv = a.triangularView<Eigen::Lower>().solve(Matrix::Identity(p, p));
  return a_inv.transpose() * a_inv;
}

Matrix mixing_matrix(int r, int p, bool sparse, double density, RngStream& rng) {
  Matrix q(r, p);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < p; ++j) {
      if (sparse) {
        const double keep = rng.uniform();
        const double value = rng.normal();
        q(i, j) = keep < density ? value : 0.0;
      } else {
        q(i, j) = rng.normal();
      }
    }
  }
  return q;
}

Matrix centered_covariance(const Matrix& x) {
  const Vector mean = x.colwise().mean();
  const Matrix c = x.rowwise() - mean.transpose();
  return (c.transpose() * c) / static_cast<double>(x.rows());
}

}  // namespace

void FamilyConfig::validate() const {
  if (p < 1) throw Error(ErrorKind::ConfigRejected, "p must be positive");
  if (const auto* iw = std::get_if<InverseWishartParams>(&params)) {
    if (iw->df_1 < p || iw->df_2 < p) {
      throw Error(ErrorKind::DegreesOfFreedomTooSmall, "inverse Wishart df must be at least p");
    }
  } else if (const auto* lat = std::get_if<LatentLowDimParams>(&params)) {
    if (lat->share_q && lat->share_theta) {
      throw Error(ErrorKind::ConfigRejected, "share_Q and share_Theta cannot both be set");
    }
    if (p < 2) throw Error(ErrorKind::ConfigRejected, "latent family needs p >= 2");
    if (!(lat->sparse_density > 0.0 && lat->sparse_density <= 1.0)) {
      throw Error(ErrorKind::ConfigRejected, "sparse density must lie in (0, 1]");
    }
  } else if (const auto* emp = std::get_if<EmpiricalCovParams>(&params)) {
    if (!(emp->gamma >= 0.0 && emp->gamma <= 1.0)) {
      throw Error(ErrorKind::ConfigRejected, "gamma must lie in [0, 1]");
    }
    if (!emp->source) throw Error(ErrorKind::ConfigRejected, "empirical family needs a dataset");
    if (emp->source->p() < p) {
      throw Error(ErrorKind::ConfigRejected, "dataset has fewer than p columns");
    }
  }
}

SpdMatrix sample_wishart(int p, double df, RngStream& rng) {
  const Matrix a = bartlett_factor(p, df, rng);
  return SpdMatrix::make_strict(a * a.transpose());
}

SpdMatrix sample_inverse_wishart(int p, double df, RngStream& rng) {
  return SpdMatrix::make_strict(inverse_from_factor(bartlett_factor(p, df, rng)));
}

SpdMatrix sample_scaled_inverse_wishart(int p, double df, RngStream& rng) {
  if (!(df >= p)) {
    throw Error(ErrorKind::DegreesOfFreedomTooSmall,
                "scaled inverse Wishart needs df >= p (df = " + std::to_string(df) +
                    ", p = " + std::to_string(p) + ")");
  }
  return SpdMatrix::make_strict(df * inverse_from_factor(bartlett_factor(p, df, rng)));
}

CovariancePair gen_iw_pair(int p, double df_1, double df_2, RngStream& rng) {
  auto s1 = rng.fork(0);
  auto s2 = rng.fork(1);
  return {sample_scaled_inverse_wishart(p, df_1, s1), sample_scaled_inverse_wishart(p, df_2, s2)};
}

int latent_rank(int p) {
  return std::max(2, static_cast<int>(std::nearbyint(static_cast<double>(p) / 25.0)));
}

LatentComponents gen_latent_components(int p, const LatentLowDimParams& config, RngStream& rng) {
  FamilyConfig{p, config}.validate();
  const int r = latent_rank(p);
  auto theta_stream_1 = rng.fork(0);
  auto theta_stream_2 = rng.fork(1);
  auto q_stream_1 = rng.fork(2);
  auto q_stream_2 = rng.fork(3);
  auto noise_stream_1 = rng.fork(4);
  auto noise_stream_2 = rng.fork(5);

  const Matrix theta_1 = sample_inverse_wishart(r, r + 1.0, theta_stream_1).entries();
  const Matrix theta_2 =
      config.share_theta ? theta_1 : sample_inverse_wishart(r, r + 1.0, theta_stream_2).entries();
  const Matrix q_1 = mixing_matrix(r, p, config.sparse_q, config.sparse_density, q_stream_1);
  const Matrix q_2 =
      config.share_q ? q_1 : mixing_matrix(r, p, config.sparse_q, config.sparse_density, q_stream_2);
  const Matrix noise_1 = sample_inverse_wishart(p, 2.0 * p, noise_stream_1).entries();
  const Matrix noise_2 = sample_inverse_wishart(p, 2.0 * p, noise_stream_2).entries();

  auto assemble = [&](const Matrix& theta, const Matrix& q, const Matrix& noise) {
    return SpdMatrix::make_strict((r + 1.0) * q.transpose() * theta * q + 0.02 * p * noise);
  };
  CovariancePair pair{assemble(theta_1, q_1, noise_1), assemble(theta_2, q_2, noise_2)};
  return LatentComponents{theta_1, theta_2, q_1, q_2, noise_1, noise_2, std::move(pair)};
}

CovariancePair gen_latent_pair(int p, const LatentLowDimParams& config, RngStream& rng) {
  return gen_latent_components(p, config, rng).pair;
}

ColumnOverlap column_overlap(const Matrix& x_1, const Matrix& x_2, double gamma, RngStream& rng) {
  if (x_1.cols() != x_2.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "datasets disagree on column count");
  }
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw Error(ErrorKind::ConfigRejected, "gamma must lie in [0, 1]");
  }
  const int n1 = static_cast<int>(x_1.rows());
  const int n2 = static_cast<int>(x_2.rows());
  const int p = static_cast<int>(x_1.cols());
  const int m = std::min(n2 / 2, n1);
  if (m < 1) {
    throw Error(ErrorKind::InsufficientRows, "need n_2 >= 2 and n_1 >= 1 (have n_1 = " +
                                                 std::to_string(n1) + ", n_2 = " +
                                                 std::to_string(n2) + ")");
  }
  auto row_stream_2 = rng.fork(0);
  auto row_stream_1 = rng.fork(1);
  auto col_stream = rng.fork(2);

  const auto rows_2 = sample_without_replacement(n2, 2 * m, row_stream_2);
  const auto rows_1 = sample_without_replacement(n1, m, row_stream_1);
  // The 1e-9 guard keeps floor() from dropping a column when gamma * p is an
  // integer that rounds just below itself.
  const int k = std::min(p, static_cast<int>(std::floor(gamma * p + 1e-9)));
  auto cols = sample_without_replacement(p, k, col_stream);
  std::sort(cols.begin(), cols.end());

  ColumnOverlap out;
  out.x_1.resize(m, p);
  out.x_2.resize(m, p);
  Matrix donor(m, p);
  for (int i = 0; i < m; ++i) {
    out.x_1.row(i) = x_1.row(rows_1[static_cast<std::size_t>(i)]);
    out.x_2.row(i) = x_2.row(rows_2[static_cast<std::size_t>(i)]);
    donor.row(i) = x_2.row(rows_2[static_cast<std::size_t>(m + i)]);
  }
  for (int c : cols) out.x_1.col(c) = donor.col(c);
  out.replaced_columns = std::move(cols);
  out.x_1_rows = rows_1;
  return out;
}

CovariancePair empirical_cov_pair(const Matrix& x_1, const Matrix& x_2) {
  if (x_1.cols() != x_2.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "datasets disagree on column count");
  }
  if (x_1.rows() == 0 || x_2.rows() == 0) {
    throw Error(ErrorKind::EmptyClass, "empirical covariance of an empty dataset");
  }
  return {SpdMatrix::make(centered_covariance(x_1)), SpdMatrix::make(centered_covariance(x_2))};
}

Matrix sample_gaussian_factor(const Vector& mean, const Matrix& factor, int n, RngStream& rng) {
  const auto p = factor.rows();
  if (mean.size() != p) throw Error(ErrorKind::DimensionMismatch, "mean and covariance differ");
  if (n < 0) throw Error(ErrorKind::ConfigRejected, "sample count must be non-negative");
  Matrix z(n, factor.cols());
  for (int i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < z.cols(); ++j) z(i, j) = rng.normal();
  Matrix x = z * factor.transpose();
  x.rowwise() += mean.transpose();
  return x;
}

Matrix sample_gaussian(const Vector& mean, const SpdMatrix& cov, int n, RngStream& rng) {
  return sample_gaussian_factor(mean, cov.cholesky_factor(), n, rng);
}

Matrix covariance_factor(const SpdMatrix& cov) {
  Eigen::LLT<Matrix> llt(cov.entries());
  if (llt.info() == Eigen::Success && llt.matrixLLT().diagonal().minCoeff() > 0.0) {
    return llt.matrixL();
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(cov.entries());
  const Vector roots = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return eig.eigenvectors() * roots.asDiagonal();
}

CovariancePair generate_pair(const FamilyConfig& family, RngStream& rng) {
  family.validate();
  const int p = family.p;
  if (const auto* iw = std::get_if<InverseWishartParams>(&family.params)) {
    return gen_iw_pair(p, iw->df_1, iw->df_2, rng);
  }
  if (const auto* lat = std::get_if<LatentLowDimParams>(&family.params)) {
    return gen_latent_pair(p, *lat, rng);
  }
  const auto overlap = draw_empirical_overlap(p, std::get<EmpiricalCovParams>(family.params), rng);
  return empirical_cov_pair(overlap.x_1, overlap.x_2);
}

ColumnOverlap draw_empirical_overlap(int p, const EmpiricalCovParams& params, RngStream& rng) {
  FamilyConfig{p, params}.validate();
  auto col_stream = rng.fork(0);
  auto overlap_stream = rng.fork(1);
  auto columns = sample_without_replacement(params.source->p(), p, col_stream);
  std::sort(columns.begin(), columns.end());
  const auto sub = params.source->select_columns(columns);
  return column_overlap(sub.rows_of(1), sub.rows_of(2), params.gamma, overlap_stream);
}

}  // namespace projsep
