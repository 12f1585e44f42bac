#include <gtest/gtest.h>

#include "oracles.hpp"
#include "projsep/types.hpp"
#include "test_support.hpp"

using namespace projsep;
using test_support::kind_of;

TEST(SpdMatrix, IdentityIsAccepted) {
  const auto a = SpdMatrix::make(Matrix::Identity(3, 3));
  EXPECT_EQ(a.dim(), 3);
  EXPECT_EQ(a.entries(), Matrix::Identity(3, 3));
  EXPECT_EQ(SpdMatrix::make_strict(Matrix::Identity(3, 3)).entries(), Matrix::Identity(3, 3));
}

TEST(SpdMatrix, TwoByTwoEigenvalues) {
  Matrix m(2, 2);
  m << 1, 0.5, 0.5, 1;
  const auto a = SpdMatrix::make(m);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(a.entries());
  EXPECT_NEAR(eig.eigenvalues()(0), 0.5, 1e-14);
  EXPECT_NEAR(eig.eigenvalues()(1), 1.5, 1e-14);
}

TEST(SpdMatrix, IndefiniteRejected) {
  Matrix m(2, 2);
  m << 1, 2, 2, 1;
  EXPECT_EQ(kind_of([&] { SpdMatrix::make_strict(m); }), ErrorKind::NotPositiveDefinite);
  EXPECT_EQ(kind_of([&] { SpdMatrix::make(m); }), ErrorKind::NotPositiveDefinite);
}

TEST(SpdMatrix, NotSquareRejected) {
  EXPECT_EQ(kind_of([] { SpdMatrix::make(Matrix::Zero(2, 3)); }), ErrorKind::NotSquare);
}

TEST(SpdMatrix, SymmetrizesAsymmetricInput) {
  Matrix m(2, 2);
  m << 2, 1, 0, 2;
  const auto a = SpdMatrix::make(m);
  EXPECT_DOUBLE_EQ(a.entries()(0, 1), 0.5);
  EXPECT_DOUBLE_EQ(a.entries()(1, 0), 0.5);
}

TEST(SpdMatrix, RankDeficientAcceptedByRelaxedOnly) {
  Vector v(3);
  v << 1, 2, 3;
  const Matrix m = v * v.transpose();
  EXPECT_NO_THROW(SpdMatrix::make(m));
  EXPECT_EQ(kind_of([&] { SpdMatrix::make_strict(m); }), ErrorKind::NotPositiveDefinite);
}

TEST(SpdMatrix, MakeIsIdempotent) {
  std::mt19937_64 gen(1);
  for (int rep = 0; rep < 20; ++rep) {
    Matrix m = oracle::random_spd(6, gen);
    m(0, 1) += 1e-12;  // slight asymmetry
    const auto a = SpdMatrix::make(m);
    const auto b = SpdMatrix::make(a.entries());
    EXPECT_TRUE(a.entries() == b.entries());
  }
}

TEST(SpdMatrix, CholeskyReconstructs) {
  std::mt19937_64 gen(2);
  for (int rep = 0; rep < 20; ++rep) {
    const auto a = SpdMatrix::make_strict(oracle::random_spd(8, gen));
    const Matrix l = a.cholesky_factor();
    EXPECT_LE((l * l.transpose() - a.entries()).norm(), 1e-9 * a.entries().norm());
  }
}

TEST(SpdMatrix, LogDetMatchesLu) {
  std::mt19937_64 gen(3);
  for (int rep = 0; rep < 20; ++rep) {
    const Matrix m = oracle::random_spd(7, gen);
    EXPECT_NEAR(SpdMatrix::make_strict(m).log_det(), oracle::log_abs_det(m), 1e-10);
  }
}

TEST(SpdMatrix, LogDetDoesNotOverflowAtLargeP) {
  const int p = 1000;
  const Matrix m = 1e3 * Matrix::Identity(p, p);
  EXPECT_NEAR(SpdMatrix::make_strict(m).log_det(), p * std::log(1e3), 1e-8);
}

TEST(ProjectionMatrix, RankChecked) {
  Matrix w = Matrix::Zero(4, 2);
  w(0, 0) = 1;
  w(1, 0) = 1;
  EXPECT_EQ(kind_of([&] { ProjectionMatrix::make(w, false); }), ErrorKind::RankDeficientAfterRetries);
  w(2, 1) = 1;
  EXPECT_NO_THROW(ProjectionMatrix::make(w, false));
}

TEST(ProjectionMatrix, QExceedsP) {
  EXPECT_EQ(kind_of([] { ProjectionMatrix::make(Matrix::Identity(2, 3), false); }),
            ErrorKind::QExceedsP);
}

TEST(ProjectionMatrix, OrthonormalFlagVerified) {
  Matrix w = Matrix::Identity(4, 2);
  EXPECT_TRUE(ProjectionMatrix::make(w, true).orthonormal_columns());
  w(0, 0) = 2;
  EXPECT_ANY_THROW(ProjectionMatrix::make(w, true));
}

TEST(ProjectionMatrix, LeadingColumns) {
  const auto w = ProjectionMatrix::identity(5).leading(2);
  EXPECT_EQ(w.embed_dim(), 2);
  EXPECT_EQ(w.entries(), Matrix::Identity(5, 2));
  EXPECT_TRUE(w.orthonormal_columns());
}

TEST(TwoClassGaussian, ValidatesInputs) {
  const auto i2 = SpdMatrix::identity(2);
  EXPECT_EQ(kind_of([&] { TwoClassGaussian(0.0, Vector::Zero(2), Vector::Zero(2), i2, i2); }),
            ErrorKind::ConfigRejected);
  EXPECT_EQ(kind_of([&] { TwoClassGaussian(0.5, Vector::Zero(3), Vector::Zero(2), i2, i2); }),
            ErrorKind::DimensionMismatch);
  const auto model = TwoClassGaussian::centered(i2, i2, 0.3);
  EXPECT_DOUBLE_EQ(model.weight_1() + model.weight_2(), 1.0);
}

TEST(TwoClassGaussian, ProjectsParameters) {
  std::mt19937_64 gen(4);
  const Matrix s1 = oracle::random_spd(5, gen);
  const Matrix s2 = oracle::random_spd(5, gen);
  Vector m1 = Vector::LinSpaced(5, 0, 1);
  const TwoClassGaussian model(0.4, m1, -m1, SpdMatrix::make_strict(s1), SpdMatrix::make_strict(s2));
  const Matrix w = oracle::random_matrix(5, 2, gen);
  const auto projected = model.project(ProjectionMatrix::make(w, false));
  EXPECT_LE((projected.cov_1().entries() - w.transpose() * s1 * w).norm(), 1e-12);
  EXPECT_LE((projected.mean_2() - w.transpose() * (-m1)).norm(), 1e-12);
  EXPECT_DOUBLE_EQ(projected.weight_1(), 0.4);
}
