#pragma once

// Reference computations that avoid the library's own code paths: explicit
// inverses, LU determinants and closed-form scalar integrals.

#include <Eigen/Dense>

#include <cmath>
#include <random>

namespace oracle {

using Eigen::MatrixXd;
using Eigen::VectorXd;

inline double log_abs_det(const MatrixXd& a) {
  return std::log(std::abs(a.fullPivLu().determinant()));
}

/// delta(s) straight from the definition with LU determinants and an
/// explicit inverse.
inline double chernoff(const VectorXd& mu1, const VectorXd& mu2, const MatrixXd& s1,
                       const MatrixXd& s2, double s) {
  const MatrixXd b = s * s1 + (1.0 - s) * s2;
  const VectorXd d = mu2 - mu1;
  const double quad = d.dot(b.inverse() * d);
  return 0.5 * s * (1.0 - s) * quad +
         0.5 * (log_abs_det(b) - s * log_abs_det(s1) - (1.0 - s) * log_abs_det(s2));
}

inline double overlap(const MatrixXd& s1, const MatrixXd& s2, double w1 = 0.5) {
  const VectorXd zero = VectorXd::Zero(s1.rows());
  return std::sqrt(w1 * (1.0 - w1)) * std::exp(-chernoff(zero, zero, s1, s2, 0.5));
}

/// The balanced example bound: 1/2 (prod_j (sqrt(a/d) + sqrt(d/a)) / 2)^(-1/2).
inline double example_bound(int q, double alpha, double delta) {
  const double factor = (std::sqrt(alpha / delta) + std::sqrt(delta / alpha)) / 2.0;
  return 0.5 * std::pow(factor, -0.5 * q);
}

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

/// Bayes risk of N(0, v1) vs N(0, v2) in one dimension with weights
/// (w1, 1 - w1); the decision region of class 1 is |x| < t.
inline double scalar_variance_risk(double v1, double v2, double w1) {
  const double w2 = 1.0 - w1;
  // w1 N(x; v1) = w2 N(x; v2)  <=>  x^2 (1/v1 - 1/v2) = 2 ln(w1/w2) + ln(v2/v1)
  const double t2 = (2.0 * std::log(w1 / w2) + std::log(v2 / v1)) / (1.0 / v1 - 1.0 / v2);
  const double t = std::sqrt(std::max(t2, 0.0));
  const double miss_1 = 2.0 * (1.0 - normal_cdf(t / std::sqrt(v1)));
  const double miss_2 = 2.0 * normal_cdf(t / std::sqrt(v2)) - 1.0;
  return w1 * miss_1 + w2 * miss_2;
}

/// A A^t + floor I with iid normal A.
inline MatrixXd random_spd(int p, std::mt19937_64& gen, double floor = 0.2) {
  std::normal_distribution<double> n01;
  MatrixXd a(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) a(i, j) = n01(gen);
  return a * a.transpose() / p + floor * MatrixXd::Identity(p, p);
}

inline MatrixXd random_matrix(int rows, int cols, std::mt19937_64& gen) {
  std::normal_distribution<double> n01;
  MatrixXd a(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a(i, j) = n01(gen);
  return a;
}

/// Random p x q frame with orthonormal columns.
inline MatrixXd random_frame(int p, int q, std::mt19937_64& gen) {
  Eigen::HouseholderQR<MatrixXd> qr(random_matrix(p, q, gen));
  return qr.householderQ() * MatrixXd::Identity(p, q);
}

}  // namespace oracle
