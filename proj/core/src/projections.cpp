#include "projsep/projections.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "projsep/error.hpp"

namespace projsep {

namespace {

constexpr int kMaxDraws = 100;

void check_q(int p, int q) {
  if (q < 1 || q > p) {
    throw Error(ErrorKind::QExceedsP,
                "q = " + std::to_string(q) + " must satisfy 1 <= q <= p = " + std::to_string(p));
  }
}

bool full_column_rank(const Matrix& w) {
  Eigen::JacobiSVD<Matrix> svd(w);
  const auto& sv = svd.singularValues();
  return sv(sv.size() - 1) > 1e-10 * sv(0);
}

// Largest-magnitude entry positive; first index wins magnitude ties.
void fix_sign(Eigen::Ref<Vector> v) {
  Eigen::Index arg = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > best) {
      best = std::abs(v(i));
      arg = i;
    }
  }
  if (v(arg) < 0.0) v = -v;
}

double separation_score(double lambda) {
  const double l = std::max(lambda, std::numeric_limits<double>::min());
  return l + 1.0 / l;
}

Matrix class_covariance(const Matrix& rows, const Vector& mean) {
  const Matrix centered = rows.rowwise() - mean.transpose();
  return (centered.transpose() * centered) / static_cast<double>(rows.rows());
}

}  // namespace

ProjectionMatrix pca_projection(const SpdMatrix& mixture_cov, int q) {
  const int p = mixture_cov.dim();
  check_q(p, q);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(mixture_cov.entries());
  if (eig.info() != Eigen::Success) {
    throw Error(ErrorKind::InternalError, "symmetric eigensolver did not converge");
  }
  const Vector& values = eig.eigenvalues();
  std::vector<int> order(static_cast<std::size_t>(p));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return values(a) > values(b); });

  Matrix w(p, q);
  for (int j = 0; j < q; ++j) {
    w.col(j) = eig.eigenvectors().col(order[static_cast<std::size_t>(j)]);
    fix_sign(w.col(j));
  }
  return ProjectionMatrix::make(w, true);
}

ProjectionMatrix random_projection(int p, int q, RngStream& rng) {
  check_q(p, q);
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    Matrix w(p, q);
    for (int j = 0; j < q; ++j)
      for (int i = 0; i < p; ++i) w(i, j) = rng.normal();
    if (full_column_rank(w)) return ProjectionMatrix::make(w, false);
  }
  throw Error(ErrorKind::InternalError, "Gaussian projection rank deficient after 100 draws");
}

ProjectionMatrix sparse_random_projection(int p, int q, RngStream& rng) {
  check_q(p, q);
  const double magnitude = std::pow(static_cast<double>(p), 0.25);
  const double half_rate = 0.5 / std::sqrt(static_cast<double>(p));
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    Matrix w(p, q);
    for (int j = 0; j < q; ++j) {
      for (int i = 0; i < p; ++i) {
        const double u = rng.uniform();
        w(i, j) = u < half_rate ? -magnitude : (u < 2.0 * half_rate ? magnitude : 0.0);
      }
    }
    if (w.cwiseAbs().maxCoeff() > 0.0 && full_column_rank(w)) {
      return ProjectionMatrix::make(w, false);
    }
  }
  throw Error(ErrorKind::RankDeficientAfterRetries,
              "sparse projection " + std::to_string(p) + "x" + std::to_string(q) +
                  " rank deficient after 100 draws; increase p or decrease q");
}

std::vector<EigPair> generalized_eigenpairs(const SpdMatrix& cov_1, const SpdMatrix& cov_2,
                                            double ridge) {
  if (cov_1.dim() != cov_2.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "covariances disagree on dimension");
  }
  if (!(ridge >= 0.0)) {
    throw Error(ErrorKind::ConfigRejected, "ridge must be non-negative");
  }
  const int p = cov_1.dim();
  const Matrix a = cov_1.entries() + ridge * Matrix::Identity(p, p);
  Eigen::LLT<Matrix> llt(a);
  if (llt.info() != Eigen::Success || !(llt.matrixLLT().diagonal().minCoeff() > 0.0)) {
    throw Error(ErrorKind::SingularAfterRidge,
                "cov_1 + " + std::to_string(ridge) + " I is not positive definite", p);
  }
  const auto lower = llt.matrixL();
  const Matrix half = lower.solve(cov_2.entries());           // L^-1 S2
  Matrix whitened = lower.solve(half.transpose());            // L^-1 S2 L^-t
  whitened = (whitened + whitened.transpose()).eval() / 2.0;

  Eigen::SelfAdjointEigenSolver<Matrix> eig(whitened);
  if (eig.info() != Eigen::Success) {
    throw Error(ErrorKind::InternalError, "symmetric eigensolver did not converge");
  }
  const Matrix phi = llt.matrixU().solve(eig.eigenvectors());  // L^-t U

  std::vector<EigPair> pairs;
  pairs.reserve(static_cast<std::size_t>(p));
  for (int j = 0; j < p; ++j) {
    pairs.push_back(EigPair{eig.eigenvalues()(j), phi.col(j), j});
  }
  return pairs;
}

std::vector<int> select_bhattacharyya(const std::vector<EigPair>& pairs, int q) {
  check_q(static_cast<int>(pairs.size()), q);
  std::vector<int> order(pairs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return separation_score(pairs[static_cast<std::size_t>(a)].value) >
           separation_score(pairs[static_cast<std::size_t>(b)].value);
  });
  order.resize(static_cast<std::size_t>(q));
  return order;
}

OptimalProjection bhattacharyya_optimal(const SpdMatrix& cov_1, const SpdMatrix& cov_2, int q,
                                        double ridge) {
  check_q(cov_1.dim(), q);
  auto pairs = generalized_eigenpairs(cov_1, cov_2, ridge);
  const auto chosen = select_bhattacharyya(pairs, q);

  const int p = cov_1.dim();
  Matrix phi(p, q);
  std::vector<EigPair> selected;
  selected.reserve(chosen.size());
  for (int j = 0; j < q; ++j) {
    const auto& pair = pairs[static_cast<std::size_t>(chosen[static_cast<std::size_t>(j)])];
    phi.col(j) = pair.vector;
    selected.push_back(pair);
  }

  // Orthonormal basis of the same nested spans; diag(R) > 0 fixes signs.
  Eigen::HouseholderQR<Matrix> qr(phi);
  Matrix basis = qr.householderQ() * Matrix::Identity(p, q);
  const Matrix r = qr.matrixQR().topRows(q).triangularView<Eigen::Upper>();
  for (int j = 0; j < q; ++j) {
    if (r(j, j) < 0.0) basis.col(j) = -basis.col(j);
  }

  std::vector<double> spectrum;
  spectrum.reserve(pairs.size());
  for (const auto& pair : pairs) spectrum.push_back(pair.value);

  return OptimalProjection{ProjectionMatrix::make(basis, true), std::move(selected),
                           std::move(spectrum)};
}

ProjectionMatrix bhattacharyya_optimal_projection(const SpdMatrix& cov_1, const SpdMatrix& cov_2,
                                                  int q, double ridge) {
  return bhattacharyya_optimal(cov_1, cov_2, q, ridge).projection;
}

double default_ridge(const SpdMatrix& cov) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(cov.entries(), Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  if (lo > 1e-10 * hi) return 0.0;
  const double ridge = 1e-6 * cov.entries().trace() / cov.dim();
  // An all-zero covariance still needs a usable ridge.
  return ridge > 0.0 ? ridge : 1e-6;
}

ClassStatistics empirical_covariances(const LabeledDataset& data) {
  const int n1 = data.count(1);
  const int n2 = data.count(2);
  if (n1 == 0 || n2 == 0) {
    throw Error(ErrorKind::EmptyClass, "both classes need at least one row (have " +
                                           std::to_string(n1) + " and " + std::to_string(n2) +
                                           ")");
  }
  const Matrix x1 = data.rows_of(1);
  const Matrix x2 = data.rows_of(2);
  Vector m1 = x1.colwise().mean();
  Vector m2 = x2.colwise().mean();
  const double n = static_cast<double>(n1 + n2);
  return ClassStatistics{SpdMatrix::make(class_covariance(x1, m1)),
                         SpdMatrix::make(class_covariance(x2, m2)),
                         n1 / n,
                         n2 / n,
                         std::move(m1),
                         std::move(m2)};
}

SpdMatrix pooled_covariance(const Matrix& x) {
  if (x.rows() == 0) throw Error(ErrorKind::EmptyClass, "no rows to pool");
  const Vector mean = x.colwise().mean();
  return SpdMatrix::make(class_covariance(x, mean));
}

}  // namespace projsep
