#pragma once

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "projframe/projframe.hpp"

namespace projframe::testing {

using EigenMatrix = Eigen::MatrixXcd;

inline EigenMatrix to_eigen(const ComplexMatrix& m) {
  EigenMatrix e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

inline ComplexMatrix from_eigen(const EigenMatrix& e) {
  ComplexMatrix m(e.rows(), e.cols());
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
  return m;
}

/// Dense rank from Eigen's SVD at rank_cutoff relative to the largest singular value.
inline std::size_t eigen_rank(const ComplexMatrix& m, double rel = default_tolerances().rank_cutoff) {
  Eigen::JacobiSVD<EigenMatrix> svd(to_eigen(m));
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel * s(0)) ++r;
  return r;
}

inline ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  const ComplexMatrix x = random_matrix(n, n, rng);
  return 0.5 * (x + adjoint(x));
}

#define EXPECT_CNEAR(a, b, tol) EXPECT_LT(std::abs(Complex(a) - Complex(b)), (tol)) << "lhs " << (a) << " rhs " << (b)

}  // namespace projframe::testing
