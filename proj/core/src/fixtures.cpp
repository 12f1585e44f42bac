#include "projsep/fixtures.hpp"

#include <string>

#include "projsep/error.hpp"

namespace projsep {

namespace {

Matrix block_diagonal(int p, int q, double alpha, double delta) {
  if (q < 1 || q > p) throw Error(ErrorKind::QExceedsP, "need 1 <= q <= p", q);
  if (!(delta > 0.0 && alpha > delta)) {
    throw Error(ErrorKind::ConfigRejected, "need 0 < delta < alpha");
  }
  Vector d = Vector::Constant(p, delta);
  d.head(q).setConstant(alpha);
  return d.asDiagonal();
}

}  // namespace

CovariancePair example_shared_subspace(int p, int q, double alpha, double delta) {
  return {SpdMatrix::make_strict(block_diagonal(p, q, alpha, delta)),
          SpdMatrix::make_strict(delta * Matrix::Identity(p, p))};
}

CovariancePair example_disjoint_subspace(int p, int q, double alpha, double delta) {
  if (2 * q > p) {
    throw Error(ErrorKind::QExceedsP, "needs q <= p/2 (p = " + std::to_string(p) + ")", q);
  }
  return {SpdMatrix::make_strict(block_diagonal(p, q, alpha, delta)),
          SpdMatrix::make_strict(alpha * Matrix::Identity(p, p))};
}

}  // namespace projsep
