#pragma once

// The unitary E_R with columns E[g, (rho,k,l)] = sqrt(d_rho/|G|) rho_kl(g), and
// the block diagonalization conj(E)* M conj(E) = diag(B_rho^T repeated d_rho times),
// B_rho = (F_alpha nu)_rho.

#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "projframe/error.hpp"
#include "projframe/fourier.hpp"
#include "projframe/galpha_matrix.hpp"
#include "projframe/numerics.hpp"
#include "projframe/repn.hpp"

namespace projframe {

/// Positive rational p/q in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t p, std::int64_t q) {
    if (q == 0) throw Error(ErrorKind::invalid_input, "zero denominator");
    if (q < 0) p = -p, q = -q;
    const std::int64_t g = std::gcd(p, q);
    return g == 0 ? Rational{0, 1} : Rational{p / g, q / g};
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// E with exact entries: E[g][c] = sqrt(scale_sq[c]) * entries[g][c].
struct ExactMatrixScaled {
  std::vector<std::vector<ExactEntry>> entries;
  std::vector<Rational> column_scale_sq;

  ComplexMatrix to_complex() const {
    const std::size_t r = entries.size(), c = column_scale_sq.size();
    ComplexMatrix out(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) out(i, j) = std::sqrt(column_scale_sq[j].value()) * value_of(entries[i][j]);
    return out;
  }

  friend bool operator==(const ExactMatrixScaled&, const ExactMatrixScaled&) = default;
};

struct EColumn {
  std::size_t rho = 0;  // index into R
  std::size_t k = 0;    // row of rho fixed by this group of columns
  std::size_t l = 0;    // column of rho
};

class DiagonalizerE {
 public:
  DiagonalizerE(IrreducibleSetPtr r, ComplexMatrix matrix, std::optional<ExactMatrixScaled> exact, std::vector<EColumn> columns)
      : r_(std::move(r)), matrix_(std::move(matrix)), exact_(std::move(exact)), columns_(std::move(columns)) {}

  const IrreducibleSetPtr& irreducibles_ptr() const noexcept { return r_; }
  const IrreducibleSet& irreducibles() const noexcept { return *r_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const std::optional<ExactMatrixScaled>& exact() const noexcept { return exact_; }
  const std::vector<EColumn>& columns() const noexcept { return columns_; }

  /// Column offset of the (rho, k) block.
  std::size_t block_offset(std::size_t rho, std::size_t k) const {
    for (std::size_t c = 0; c < columns_.size(); ++c)
      if (columns_[c].rho == rho && columns_[c].k == k) return c;
    throw Error(ErrorKind::index_out_of_range, "no such (rho,k) block", {rho, k});
  }

 private:
  IrreducibleSetPtr r_;
  ComplexMatrix matrix_;
  std::optional<ExactMatrixScaled> exact_;
  std::vector<EColumn> columns_;
};

inline DiagonalizerE build_E(const IrreducibleSetPtr& r) {
  const std::size_t n = r->order();
  if (r->dimension_sum_of_squares() != n) {
    std::ostringstream msg;
    msg << "sum of squared dimensions " << r->dimension_sum_of_squares() << " differs from |G| = " << n;
    throw Error(ErrorKind::incomplete_set, msg.str());
  }
  const bool exact = std::all_of(r->begin(), r->end(), [](const ProjectiveRep& p) { return p.exact().has_value(); });
  std::vector<EColumn> cols;
  for (std::size_t p = 0; p < r->size(); ++p)
    for (std::size_t k = 0; k < (*r)[p].dim(); ++k)
      for (std::size_t l = 0; l < (*r)[p].dim(); ++l) cols.push_back({p, k, l});

  ComplexMatrix e(n, n);
  ExactMatrixScaled ex;
  if (exact) ex.entries.assign(n, std::vector<ExactEntry>(n));
  for (std::size_t c = 0; c < n; ++c) {
    const auto& rho = (*r)[cols[c].rho];
    const Rational s2 = Rational::make(static_cast<std::int64_t>(rho.dim()), static_cast<std::int64_t>(n));
    const double s = std::sqrt(s2.value());
    for (GroupIndex g = 0; g < n; ++g) e(g, c) = s * rho(g)(cols[c].k, cols[c].l);
    if (exact) {
      ex.column_scale_sq.push_back(s2);
      for (GroupIndex g = 0; g < n; ++g) ex.entries[g][c] = (*rho.exact())[g][cols[c].k][cols[c].l];
    }
  }
  return DiagonalizerE(r, std::move(e), exact ? std::optional<ExactMatrixScaled>(std::move(ex)) : std::nullopt, std::move(cols));
}

struct DiagonalBlock {
  std::size_t rho = 0;
  std::string label;
  std::size_t k = 0;
  ComplexMatrix matrix;
};

struct BlockDiagonalization {
  ComplexMatrix conjugated;          // the full conjugated matrix
  std::vector<DiagonalBlock> blocks;  // in (rho, k) order
  double off_block_residual = 0;     // largest entry outside the diagonal blocks
  double scale = 0;                  // Frobenius norm of the input
};

namespace detail {
inline BlockDiagonalization extract_blocks(ComplexMatrix conj, const DiagonalizerE& e, double scale,
                                           const ToleranceConfig& tol) {
  const IrreducibleSet& r = e.irreducibles();
  const std::size_t n = conj.rows();
  std::vector<std::size_t> block_of(n);
  BlockDiagonalization out;
  std::size_t offset = 0, id = 0;
  for (std::size_t p = 0; p < r.size(); ++p) {
    const std::size_t d = r[p].dim();
    for (std::size_t k = 0; k < d; ++k, ++id) {
      out.blocks.push_back({p, r[p].label(), k, conj.block(offset, offset, d, d)});
      for (std::size_t i = 0; i < d; ++i) block_of[offset + i] = id;
      offset += d;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (block_of[i] != block_of[j]) out.off_block_residual = std::max(out.off_block_residual, std::abs(conj(i, j)));
  out.scale = scale;
  out.conjugated = std::move(conj);
  if (out.off_block_residual > tol.block_residual * std::max(scale, 1e-300)) {
    std::ostringstream msg;
    msg << "off-block residual " << out.off_block_residual << " exceeds " << tol.block_residual << " * ||M|| = "
        << tol.block_residual * scale;
    throw Error(ErrorKind::diagonalization_failure, msg.str());
  }
  return out;
}

inline void require_same_setting(const GAlphaMatrix& m, const DiagonalizerE& e) {
  if (!m.cocycle().same_values(e.irreducibles().cocycle()))
    throw Error(ErrorKind::group_mismatch, "matrix and irreducible set use different cocycles");
}
}  // namespace detail

/// conj(E)* M conj(E) = E^T M conj(E); blocks are (F_alpha nu)_rho^T.
inline BlockDiagonalization block_diagonalize(const GAlphaMatrix& m, const DiagonalizerE& e,
                                              const ToleranceConfig& tol = default_tolerances()) {
  detail::require_same_setting(m, e);
  const ComplexMatrix dense = to_dense(m);
  const ComplexMatrix& em = e.matrix();
  return detail::extract_blocks(transpose(em) * dense * conj(em), e, frobenius_norm(dense), tol);
}

/// E* M E for the trivial cocycle; blocks are (script-F nu)_rho.
inline BlockDiagonalization ordinary_block_diagonalize(const GAlphaMatrix& m, const DiagonalizerE& e,
                                                       const ToleranceConfig& tol = default_tolerances()) {
  detail::require_same_setting(m, e);
  if (!m.cocycle().is_trivial(tol.validation))
    throw Error(ErrorKind::unsupported, "E* M E is block diagonal only for the trivial cocycle; use block_diagonalize");
  const ComplexMatrix dense = to_dense(m);
  const ComplexMatrix& em = e.matrix();
  return detail::extract_blocks(adjoint(em) * dense * em, e, frobenius_norm(dense), tol);
}

/// det M_alpha(nu) = prod_rho det((F_alpha nu)_rho)^{d_rho}
inline Complex determinant(const GAlphaMatrix& m, const IrreducibleSetPtr& r) {
  if (!m.cocycle().same_values(r->cocycle())) throw Error(ErrorKind::group_mismatch, "matrix and irreducible set use different cocycles");
  const FourierImage img = forward(m.nu(), r);
  Complex det{1.0, 0.0};
  for (std::size_t i = 0; i < img.size(); ++i) {
    const Complex b = determinant_dense(img[i]);
    for (std::size_t k = 0; k < (*r)[i].dim(); ++k) det *= b;
  }
  return det;
}

struct BlockRank {
  std::size_t rho = 0;
  std::string label;
  std::size_t dim = 0;
  std::size_t rank = 0;
  std::vector<double> singular_values;
};

struct RankCertificate {
  std::size_t rank = 0;
  double cutoff = 0;  // absolute singular-value cutoff shared by every block
  std::vector<BlockRank> blocks;
};

/// rank M_alpha(nu) = sum_rho d_rho rank((F_alpha nu)_rho). The cutoff is
/// rank_cutoff times the largest singular value over all blocks, which is
/// the largest singular value of M itself.
inline RankCertificate rank(const GAlphaMatrix& m, const IrreducibleSetPtr& r, const ToleranceConfig& tol = default_tolerances()) {
  if (!m.cocycle().same_values(r->cocycle())) throw Error(ErrorKind::group_mismatch, "matrix and irreducible set use different cocycles");
  const FourierImage img = forward(m.nu(), r);
  RankCertificate cert;
  double top = 0;
  for (std::size_t i = 0; i < img.size(); ++i) {
    BlockRank b{i, (*r)[i].label(), (*r)[i].dim(), 0, singular_values(img[i], tol)};
    if (!b.singular_values.empty()) top = std::max(top, b.singular_values.front());
    cert.blocks.push_back(std::move(b));
  }
  cert.cutoff = tol.rank_cutoff * top;
  for (auto& b : cert.blocks) {
    b.rank = top > 0 ? rank_above(b.singular_values, cert.cutoff) : 0;
    cert.rank += b.dim * b.rank;
  }
  return cert;
}

}  // namespace projframe
