#pragma once

// Dense complex linear algebra for matrices indexed by small groups.
// Everything is O(n^3) and allocation-happy; n is at most a few hundred.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "projframe/error.hpp"

namespace projframe {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Centralized numerical thresholds. Relative tolerances are multiplied by
/// the magnitude of the object under test at the point of use.
struct ToleranceConfig {
  double structural_zero = 1e-10;   // relative; "is this block zero"
  double projection = 1e-9;         // B^2 = B, B* = B
  double rank_cutoff = 1e-8;        // relative to the largest singular value
  double roundtrip = 1e-12;         // Fourier round trip
  double validation = 1e-10;        // cocycle identity, rep multiplication law
  double unit_modulus = 1e-12;      // |alpha| = 1
  double recognize = 1e-9;          // (G,alpha)-matrix recognition, relative
  double block_residual = 1e-9;     // off-block mass after conjugation, relative
  double irreducibility = 1e-8;     // <chi,chi>/|G| = 1
  double integrality = 1e-6;        // multiplicities must be near integers
  double eigen_gap = 0.5;           // clustering of projection eigenvalues at {0,1}
  double eigen_cluster = 1e-6;      // max distance of a projection eigenvalue from 0 or 1
  double psd = 1e-9;                // smallest admissible eigenvalue, relative
  double gramian_residual = 1e-8;   // rebuilt Gramian vs input, relative
  double hermitian_input = 1e-10;   // precondition of the eigensolver, relative
  double jacobi_offdiag = 1e-14;    // Jacobi stopping criterion, relative

  /// Override a field by name; returns false for unknown names.
  bool set(std::string_view name, double value) {
    for (auto& [key, field] : fields()) {
      if (key == name) {
        this->*field = value;
        return true;
      }
    }
    return false;
  }

  static const std::vector<std::pair<std::string_view, double ToleranceConfig::*>>& fields() {
    static const std::vector<std::pair<std::string_view, double ToleranceConfig::*>> table{
        {"structural_zero", &ToleranceConfig::structural_zero},
        {"projection", &ToleranceConfig::projection},
        {"rank_cutoff", &ToleranceConfig::rank_cutoff},
        {"roundtrip", &ToleranceConfig::roundtrip},
        {"validation", &ToleranceConfig::validation},
        {"unit_modulus", &ToleranceConfig::unit_modulus},
        {"recognize", &ToleranceConfig::recognize},
        {"block_residual", &ToleranceConfig::block_residual},
        {"irreducibility", &ToleranceConfig::irreducibility},
        {"integrality", &ToleranceConfig::integrality},
        {"eigen_gap", &ToleranceConfig::eigen_gap},
        {"eigen_cluster", &ToleranceConfig::eigen_cluster},
        {"psd", &ToleranceConfig::psd},
        {"gramian_residual", &ToleranceConfig::gramian_residual},
        {"hermitian_input", &ToleranceConfig::hermitian_input},
        {"jacobi_offdiag", &ToleranceConfig::jacobi_offdiag},
    };
    return table;
  }
};

inline const ToleranceConfig& default_tolerances() {
  static const ToleranceConfig config{};
  return config;
}

/// Row-major dense complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols, Complex fill = {})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw Error(ErrorKind::shape_mismatch, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  ComplexVector column(std::size_t c) const {
    ComplexVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    ComplexMatrix out(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
    return out;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  ComplexMatrix& operator*=(Complex s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::shape_mismatch, "matmul: inner dimensions differ");
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> x) {
    if (a.cols_ != x.size()) throw Error(ErrorKind::shape_mismatch, "matvec: dimension mismatch");
    ComplexVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * x[j];
    return out;
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  void check_same_shape(const ComplexMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw Error(ErrorKind::shape_mismatch, "matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

inline ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b; }

inline ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

inline ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

inline ComplexMatrix conj(const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (auto& x : out.data()) x = std::conj(x);
  return out;
}

inline Complex trace(const ComplexMatrix& a) {
  Complex t{};
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

/// Frobenius inner product trace(A B*).
inline Complex frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::shape_mismatch, "frobenius_inner: shapes differ");
  Complex s{};
  auto da = a.data();
  auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) s += da[i] * std::conj(db[i]);
  return s;
}

inline double frobenius_norm(const ComplexMatrix& a) {
  double s = 0;
  for (const auto& x : a.data()) s += std::norm(x);
  return std::sqrt(s);
}

inline double max_abs(const ComplexMatrix& a) {
  double m = 0;
  for (const auto& x : a.data()) m = std::max(m, std::abs(x));
  return m;
}

inline double max_abs(std::span<const Complex> v) {
  double m = 0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return max_abs(a - b); }

/// <x, y> = sum_i x_i conj(y_i), linear in the first argument.
inline Complex inner(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) throw Error(ErrorKind::shape_mismatch, "inner: length mismatch");
  Complex s{};
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
  return s;
}

inline double norm2(std::span<const Complex> x) { return std::sqrt(std::real(inner(x, x))); }

inline ComplexVector operator+(ComplexVector a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::shape_mismatch, "vector add: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline ComplexVector operator-(ComplexVector a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::shape_mismatch, "vector sub: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline ComplexVector operator*(Complex s, ComplexVector a) {
  for (auto& x : a) x *= s;
  return a;
}

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::shape_mismatch, "max_abs_diff: length mismatch");
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

/// ||A* - A||_max
inline double hermitian_defect(const ComplexMatrix& a) {
  if (!a.square()) throw Error(ErrorKind::shape_mismatch, "hermitian_defect: matrix not square");
  double m = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
  return m;
}

/// Determinant by LU factorization with partial pivoting.
inline Complex determinant_dense(ComplexMatrix a) {
  if (!a.square()) throw Error(ErrorKind::shape_mismatch, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  Complex det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
    if (a(piv, k) == Complex{}) return 0.0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = a(i, k) / a(k, k);
      if (f == Complex{}) continue;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column j pairs with values[j]
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
/// Each rotation is a phase change that makes the pivot real followed by a real
/// Givens rotation; sweeps continue until the off-diagonal Frobenius mass is
/// below `jacobi_offdiag * ||A||_F`.
inline HermitianEigen hermitian_eigendecomposition(const ComplexMatrix& input,
                                                   const ToleranceConfig& tol = default_tolerances()) {
  if (!input.square()) throw Error(ErrorKind::shape_mismatch, "eigendecomposition of non-square matrix");
  const std::size_t n = input.rows();
  const double scale = frobenius_norm(input);
  if (hermitian_defect(input) > tol.hermitian_input * std::max(scale, 1.0))
    throw Error(ErrorKind::invalid_input, "eigendecomposition: matrix is not Hermitian");

  ComplexMatrix a = input;
  for (std::size_t i = 0; i < n; ++i) a(i, i) = std::real(a(i, i));
  ComplexMatrix v = ComplexMatrix::identity(n);

  auto off_mass = [&] {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  const double target = tol.jacobi_offdiag * scale;
  for (int sweep = 0; sweep < 100 && off_mass() > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        const Complex phase = a(p, q) / mag;
        const double app = std::real(a(p, p));
        const double aqq = std::real(a(q, q));
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Rotation G acting on columns p,q: [[c, s], [-s conj(u), c conj(u)]].
        const Complex g_pp = c;
        const Complex g_pq = s;
        const Complex g_qp = -s * std::conj(phase);
        const Complex g_qq = c * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * g_pp + akq * g_qp;
          a(k, q) = akp * g_pq + akq * g_qq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
          a(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = std::real(a(p, p));
        a(q, q) = std::real(a(q, q));
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * g_pp + vkq * g_qp;
          v(k, q) = vkp * g_pq + vkq * g_qq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return std::real(a(i, i)) < std::real(a(j, j)); });
  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = std::real(a(order[j], order[j]));
    for (std::size_t k = 0; k < n; ++k) out.vectors(k, j) = v(k, order[j]);
  }
  return out;
}

struct SingularTriplets {
  std::vector<double> values;  // descending, min(rows, cols) of them
  ComplexMatrix left;          // columns u_i
  ComplexMatrix right;         // columns v_i, A v_i = sigma_i u_i
};

/// Singular value decomposition read off the Hermitian dilation [[0, A], [A*, 0]],
/// whose eigenvalues are +-sigma_i. Working on the dilation keeps small
/// singular values at absolute accuracy ~eps*||A|| rather than sqrt(eps*||A||).
inline SingularTriplets singular_value_decomposition(const ComplexMatrix& a,
                                                     const ToleranceConfig& tol = default_tolerances()) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  ComplexMatrix h(m + n, m + n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      h(i, m + j) = a(i, j);
      h(m + j, i) = std::conj(a(i, j));
    }
  const HermitianEigen eig = hermitian_eigendecomposition(h, tol);
  const std::size_t k = std::min(m, n);
  SingularTriplets out{std::vector<double>(k), ComplexMatrix(m, k), ComplexMatrix(n, k)};
  const double root2 = std::sqrt(2.0);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t col = m + n - 1 - i;
    out.values[i] = std::max(eig.values[col], 0.0);
    for (std::size_t r = 0; r < m; ++r) out.left(r, i) = root2 * eig.vectors(r, col);
    for (std::size_t r = 0; r < n; ++r) out.right(r, i) = root2 * eig.vectors(m + r, col);
  }
  return out;
}

inline std::vector<double> singular_values(const ComplexMatrix& a,
                                           const ToleranceConfig& tol = default_tolerances()) {
  return singular_value_decomposition(a, tol).values;
}

/// Number of singular values above `cutoff` (absolute).
inline std::size_t rank_above(std::span<const double> sigma, double cutoff) {
  return static_cast<std::size_t>(std::count_if(sigma.begin(), sigma.end(), [&](double s) { return s > cutoff; }));
}

inline std::size_t numerical_rank(const ComplexMatrix& a, const ToleranceConfig& tol = default_tolerances()) {
  const auto sigma = singular_values(a, tol);
  if (sigma.empty()) return 0;
  return rank_above(sigma, tol.rank_cutoff * sigma.front());
}

/// Moore-Penrose pseudoinverse; singular values below rank_cutoff * sigma_max are dropped.
inline ComplexMatrix pseudoinverse_dense(const ComplexMatrix& a, const ToleranceConfig& tol = default_tolerances()) {
  const SingularTriplets svd = singular_value_decomposition(a, tol);
  ComplexMatrix out(a.cols(), a.rows());
  if (svd.values.empty() || svd.values.front() == 0.0) return out;
  const double cutoff = tol.rank_cutoff * svd.values.front();
  for (std::size_t i = 0; i < svd.values.size(); ++i) {
    if (svd.values[i] <= cutoff) continue;
    const double inv = 1.0 / svd.values[i];
    for (std::size_t r = 0; r < a.cols(); ++r)
      for (std::size_t c = 0; c < a.rows(); ++c)
        out(r, c) += inv * svd.right(r, i) * std::conj(svd.left(c, i));
  }
  return out;
}

}  // namespace projframe
