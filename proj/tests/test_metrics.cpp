#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "projsep/fixtures.hpp"
#include "projsep/metrics.hpp"
#include "projsep/projections.hpp"
#include "test_support.hpp"

using namespace projsep;
using test_support::kind_of;

namespace {

TwoClassGaussian scalar_model(double v1, double v2, double w1 = 0.5) {
  return TwoClassGaussian::centered(SpdMatrix::make_strict(Matrix::Constant(1, 1, v1)),
                                    SpdMatrix::make_strict(Matrix::Constant(1, 1, v2)), w1);
}

}  // namespace

TEST(Chernoff, ScalarVarianceExample) {
  // 1/2 ln(((1 + 4)/2) / sqrt(1 * 4)) = 1/2 ln(1.25)
  EXPECT_NEAR(chernoff_distance(scalar_model(1, 4), 0.5), 0.5 * std::log(1.25), 1e-14);
  EXPECT_NEAR(chernoff_distance(scalar_model(1, 4), 0.5), 0.111571, 1e-6);
}

TEST(Chernoff, MeanShiftExample) {
  // Identity covariances, ||d|| = 2: s(1-s)/2 * 4 = 0.5 at s = 1/2.
  Vector mu2 = Vector::Zero(3);
  mu2(0) = 2;
  const TwoClassGaussian model(0.5, Vector::Zero(3), mu2, SpdMatrix::identity(3),
                               SpdMatrix::identity(3));
  EXPECT_NEAR(chernoff_distance(model, 0.5), 0.5, 1e-14);
  EXPECT_NEAR(bhattacharyya_distance(model), 0.5, 1e-14);
}

TEST(Chernoff, MatchesLuOracle) {
  std::mt19937_64 gen(10);
  std::uniform_real_distribution<double> unif(0.05, 0.95);
  for (int rep = 0; rep < 50; ++rep) {
    const int p = 2 + rep % 6;
    const Matrix s1 = oracle::random_spd(p, gen);
    const Matrix s2 = oracle::random_spd(p, gen);
    const Vector m1 = oracle::random_matrix(p, 1, gen);
    const Vector m2 = oracle::random_matrix(p, 1, gen);
    const TwoClassGaussian model(0.5, m1, m2, SpdMatrix::make_strict(s1), SpdMatrix::make_strict(s2));
    const double s = unif(gen);
    EXPECT_NEAR(chernoff_distance(model, s), oracle::chernoff(m1, m2, s1, s2, s), 1e-9);
  }
}

TEST(Chernoff, BhattacharyyaIsHalfExponent) {
  std::mt19937_64 gen(11);
  for (int rep = 0; rep < 30; ++rep) {
    const int p = 3 + rep % 4;
    const TwoClassGaussian model(0.3, oracle::random_matrix(p, 1, gen), Vector::Zero(p),
                                 SpdMatrix::make_strict(oracle::random_spd(p, gen)),
                                 SpdMatrix::make_strict(oracle::random_spd(p, gen)));
    EXPECT_NEAR(bhattacharyya_distance(model), chernoff_distance(model, 0.5), 1e-12);
  }
}

TEST(Chernoff, NonNegativeAndZeroForEqualClasses) {
  std::mt19937_64 gen(12);
  const Matrix s = oracle::random_spd(4, gen);
  const auto model = TwoClassGaussian::centered(SpdMatrix::make_strict(s), SpdMatrix::make_strict(s));
  EXPECT_NEAR(chernoff_distance(model, 0.3), 0.0, 1e-12);
  EXPECT_NEAR(bhattacharyya_overlap(model), 0.5, 1e-12);
}

TEST(Chernoff, RejectsBadExponent) {
  EXPECT_EQ(kind_of([] { chernoff_distance(scalar_model(1, 2), -0.1); }), ErrorKind::ConfigRejected);
  EXPECT_EQ(kind_of([] { chernoff_distance(scalar_model(1, 2), 1.5); }), ErrorKind::ConfigRejected);
  // The endpoints are allowed and give zero distance.
  EXPECT_NEAR(chernoff_distance(scalar_model(1, 2), 0.0), 0.0, 1e-14);
  EXPECT_NEAR(chernoff_distance(scalar_model(1, 2), 1.0), 0.0, 1e-14);
}

TEST(Overlap, PriorWeightsScaleOverlap) {
  // Equal classes: sqrt(0.9 * 0.1) = 0.3.
  const auto i = SpdMatrix::identity(3);
  EXPECT_NEAR(bhattacharyya_overlap(TwoClassGaussian::centered(i, i, 0.9)), 0.3, 1e-14);
  const auto report = bhattacharyya_report(scalar_model(1, 4));
  EXPECT_NEAR(report.overlap, 0.5 * std::exp(-0.5 * std::log(1.25)), 1e-14);
  EXPECT_DOUBLE_EQ(report.s, 0.5);
}

TEST(Overlap, EmbeddedMatchesOracle) {
  std::mt19937_64 gen(13);
  for (int rep = 0; rep < 30; ++rep) {
    const int p = 6;
    const Matrix s1 = oracle::random_spd(p, gen);
    const Matrix s2 = oracle::random_spd(p, gen);
    const Matrix w = oracle::random_matrix(p, 2, gen);
    const auto model = TwoClassGaussian::centered(SpdMatrix::make_strict(s1), SpdMatrix::make_strict(s2));
    const double expected =
        oracle::overlap(w.transpose() * s1 * w, w.transpose() * s2 * w);
    EXPECT_NEAR(embedded_overlap(model, ProjectionMatrix::make(w, false)), expected, 1e-10);
    EXPECT_NEAR(embedded_overlap(model.cov_1(), model.cov_2(), ProjectionMatrix::make(w, false)),
                expected, 1e-10);
  }
}

TEST(Overlap, InvariantUnderRightMultiplication) {
  std::mt19937_64 gen(14);
  for (int rep = 0; rep < 20; ++rep) {
    const int p = 7, q = 3;
    const auto model = TwoClassGaussian::centered(SpdMatrix::make_strict(oracle::random_spd(p, gen)),
                                                  SpdMatrix::make_strict(oracle::random_spd(p, gen)));
    const Matrix w = oracle::random_matrix(p, q, gen);
    Matrix r = oracle::random_matrix(q, q, gen);
    r += 3 * Matrix::Identity(q, q);  // keep it well conditioned
    const double a = embedded_overlap(model, ProjectionMatrix::make(w, false));
    const double b = embedded_overlap(model, ProjectionMatrix::make(w * r, false));
    EXPECT_NEAR(a, b, 1e-10);
  }
}

TEST(Overlap, InvariantUnderAmbientRotation) {
  std::mt19937_64 gen(15);
  const int p = 5;
  const Matrix s1 = oracle::random_spd(p, gen);
  const Matrix s2 = oracle::random_spd(p, gen);
  const Matrix u = oracle::random_frame(p, p, gen);
  const Matrix w = oracle::random_matrix(p, 2, gen);
  const auto a = TwoClassGaussian::centered(SpdMatrix::make_strict(s1), SpdMatrix::make_strict(s2));
  const auto b = TwoClassGaussian::centered(SpdMatrix::make_strict(u * s1 * u.transpose()),
                                            SpdMatrix::make_strict(u * s2 * u.transpose()));
  EXPECT_NEAR(embedded_overlap(a, ProjectionMatrix::make(w, false)),
              embedded_overlap(b, ProjectionMatrix::make(u * w, false)), 1e-10);
}

TEST(Overlap, SharedSubspaceExample) {
  for (const auto& [alpha, delta, q] : std::vector<std::tuple<double, double, int>>{
           {4, 1, 1}, {4, 1, 2}, {100, 1, 2}}) {
    const auto [s1, s2] = example_shared_subspace(10, q, alpha, delta);
    const auto model = TwoClassGaussian::centered(s1, s2);
    const double got = embedded_overlap(model, ProjectionMatrix::identity(10).leading(q));
    EXPECT_NEAR(got, oracle::example_bound(q, alpha, delta), 1e-12);
  }
  EXPECT_NEAR(oracle::example_bound(1, 4, 1), 0.447213595499958, 1e-12);
}

TEST(Overlap, DisjointSubspaceExamplePcaHalf) {
  const auto [s1, s2] = example_disjoint_subspace(10, 2, 4, 1);
  const auto model = TwoClassGaussian::centered(s1, s2);
  EXPECT_DOUBLE_EQ(embedded_overlap(model, ProjectionMatrix::identity(10).leading(2)), 0.5);
}

TEST(Overlap, SingularProjectedCovarianceRejected) {
  Matrix s1 = Matrix::Identity(3, 3);
  s1(2, 2) = 0;
  const auto a = SpdMatrix::make(s1);
  Matrix w = Matrix::Zero(3, 1);
  w(2, 0) = 1;
  EXPECT_ANY_THROW(embedded_overlap(a, SpdMatrix::identity(3), ProjectionMatrix::make(w, true)));
}

TEST(ClosedForm, KnownValues) {
  const std::vector<double> one{4.0};
  EXPECT_NEAR(optimal_overlap_closed_form(one, 0.5, 0.5), 0.447213595499958, 1e-12);
  const std::vector<double> unit{1.0, 1.0, 1.0};
  EXPECT_DOUBLE_EQ(optimal_overlap_closed_form(unit, 0.5, 0.5), 0.5);
  // Two eigenvalues 1/4: each factor (1/2 + 2)/2 = 1.25, so 0.5 / 1.25 = 0.4.
  const std::vector<double> two{0.25, 0.25};
  EXPECT_NEAR(optimal_overlap_closed_form(two, 0.5, 0.5), 0.4, 1e-14);
}

TEST(ClosedForm, RejectsNonPositive) {
  const std::vector<double> bad{1.0, 0.0};
  EXPECT_EQ(kind_of([&] { optimal_overlap_closed_form(bad, 0.5, 0.5); }),
            ErrorKind::NonPositiveEigenvalue);
}

TEST(ClosedForm, AgreesWithEmbeddedOverlapOfOptimalProjection) {
  std::mt19937_64 gen(16);
  for (int rep = 0; rep < 20; ++rep) {
    const int p = 8, q = 3;
    const auto s1 = SpdMatrix::make_strict(oracle::random_spd(p, gen));
    const auto s2 = SpdMatrix::make_strict(oracle::random_spd(p, gen));
    const auto opt = bhattacharyya_optimal(s1, s2, q, 0.0);
    std::vector<double> values;
    for (const auto& pair : opt.selected) values.push_back(pair.value);
    const auto model = TwoClassGaussian::centered(s1, s2);
    EXPECT_NEAR(optimal_overlap_closed_form(values, 0.5, 0.5),
                embedded_overlap(model, opt.projection), 1e-9);
  }
}
