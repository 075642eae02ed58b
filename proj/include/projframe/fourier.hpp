#pragma once

// alpha-Fourier transform over a complete set R of unitary irreducibles:
//   (F f)_rho = sum_a f(a) rho(a)*,
//   (F^{-1} A)(a) = (1/|G|) sum_rho d_rho trace(A_rho rho(a)).

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "projframe/error.hpp"
#include "projframe/galpha_matrix.hpp"
#include "projframe/numerics.hpp"
#include "projframe/repn.hpp"

namespace projframe {

/// One d_rho x d_rho block per member of R, in R's order.
class FourierImage {
 public:
  FourierImage(IrreducibleSetPtr irreducibles, std::vector<ComplexMatrix> blocks)
      : irreducibles_(std::move(irreducibles)), blocks_(std::move(blocks)) {
    if (!irreducibles_) throw Error(ErrorKind::invalid_input, "Fourier image without an irreducible set");
    if (blocks_.size() != irreducibles_->size())
      throw Error(ErrorKind::shape_mismatch, "one Fourier block per irreducible is required");
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      const std::size_t d = (*irreducibles_)[i].dim();
      if (blocks_[i].rows() != d || blocks_[i].cols() != d)
        throw Error(ErrorKind::shape_mismatch, "Fourier block has the wrong size", {i});
    }
  }

  static FourierImage zero(IrreducibleSetPtr r) {
    std::vector<ComplexMatrix> blocks;
    for (const auto& rho : *r) blocks.emplace_back(rho.dim(), rho.dim());
    return FourierImage(std::move(r), std::move(blocks));
  }

  const IrreducibleSetPtr& irreducibles_ptr() const noexcept { return irreducibles_; }
  const IrreducibleSet& irreducibles() const noexcept { return *irreducibles_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  const ComplexMatrix& operator[](std::size_t i) const { return blocks_.at(i); }
  ComplexMatrix& operator[](std::size_t i) { return blocks_.at(i); }
  const std::vector<ComplexMatrix>& blocks() const noexcept { return blocks_; }

  /// Blockwise product.
  friend FourierImage operator*(const FourierImage& a, const FourierImage& b) {
    if (a.irreducibles_ != b.irreducibles_ && a.size() != b.size())
      throw Error(ErrorKind::shape_mismatch, "Fourier images over different irreducible sets");
    std::vector<ComplexMatrix> out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] * b[i]);
    return FourierImage(a.irreducibles_, std::move(out));
  }

 private:
  IrreducibleSetPtr irreducibles_;
  std::vector<ComplexMatrix> blocks_;
};

namespace detail {
inline void require_unitary_set(const IrreducibleSet& r) {
  if (!r.all_unitary()) throw Error(ErrorKind::unsupported, "the Fourier transform needs a unitary irreducible set");
}
inline void require_length(std::span<const Complex> f, const IrreducibleSet& r) {
  if (f.size() != r.order()) throw Error(ErrorKind::dimension_mismatch, "function length differs from |G|");
}
}  // namespace detail

/// (F_alpha f)_rho = sum_a f(a) rho(a)*
inline FourierImage forward(std::span<const Complex> f, const IrreducibleSetPtr& r) {
  detail::require_unitary_set(*r);
  detail::require_length(f, *r);
  std::vector<ComplexMatrix> blocks;
  for (const auto& rho : *r) {
    ComplexMatrix b(rho.dim(), rho.dim());
    for (GroupIndex a = 0; a < f.size(); ++a) {
      if (f[a] == Complex{}) continue;
      const ComplexMatrix& m = rho(a);
      for (std::size_t i = 0; i < rho.dim(); ++i)
        for (std::size_t j = 0; j < rho.dim(); ++j) b(i, j) += f[a] * std::conj(m(j, i));
    }
    blocks.push_back(std::move(b));
  }
  return FourierImage(r, std::move(blocks));
}

/// (F_alpha^{-1} A)(a) = (1/|G|) sum_rho d_rho trace(A_rho rho(a))
inline ComplexVector inverse(const FourierImage& img) {
  const IrreducibleSet& r = img.irreducibles();
  const std::size_t n = r.order();
  ComplexVector f(n);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto& rho = r[i];
    const auto d = static_cast<double>(rho.dim());
    const ComplexMatrix& a = img[i];
    for (GroupIndex g = 0; g < n; ++g) {
      // trace(A rho(g)) = sum_{j,k} A_jk rho(g)_kj
      Complex t{};
      for (std::size_t j = 0; j < rho.dim(); ++j)
        for (std::size_t k = 0; k < rho.dim(); ++k) t += a(j, k) * rho(g)(k, j);
      f[g] += d * t;
    }
  }
  for (auto& x : f) x /= static_cast<double>(n);
  return f;
}

/// f~(a) = f(a^{-1})
inline ComplexVector reflect(std::span<const Complex> f, const FiniteGroup& g) {
  ComplexVector out(f.size());
  for (GroupIndex a = 0; a < f.size(); ++a) out[a] = f[g.inv(a)];
  return out;
}

/// (script-F_alpha f)_rho = (F_alpha f~)_rho = sum_a f(a) rho(a) / (alpha(a,a^{-1}) alpha(1,1))
inline FourierImage forward_variant(std::span<const Complex> f, const IrreducibleSetPtr& r) {
  detail::require_length(f, *r);
  return forward(reflect(f, r->group()), r);
}

inline ComplexVector inverse_variant(const FourierImage& img) {
  return reflect(inverse(img), img.irreducibles().group());
}

struct PlancherelCheck {
  Complex lhs;                  // <nu, mu>
  Complex rhs;                  // (1/|G|) sum d <F nu, F mu>_Frobenius
  double residual = 0;
  Complex bilinear_lhs;         // sum_a nu(a) mu(a^{-1}) / (alpha(a,a^{-1}) alpha(1,1))
  Complex bilinear_rhs;         // (1/|G|) sum d trace(F nu F mu)
  double bilinear_residual = 0;
};

inline PlancherelCheck check_plancherel(std::span<const Complex> nu, std::span<const Complex> mu, const IrreducibleSetPtr& r) {
  detail::require_length(nu, *r);
  detail::require_length(mu, *r);
  const FourierImage fn = forward(nu, r), fm = forward(mu, r);
  const Cocycle& c = r->cocycle();
  const FiniteGroup& g = r->group();
  const auto n = static_cast<double>(r->order());
  PlancherelCheck out;
  out.lhs = inner(nu, mu);
  for (GroupIndex a = 0; a < nu.size(); ++a) out.bilinear_lhs += nu[a] * mu[g.inv(a)] / (c(a, g.inv(a)) * c(0, 0));
  for (std::size_t i = 0; i < r->size(); ++i) {
    const auto d = static_cast<double>((*r)[i].dim());
    out.rhs += d * frobenius_inner(fn[i], fm[i]);
    out.bilinear_rhs += d * trace(fn[i] * fm[i]);
  }
  out.rhs /= n;
  out.bilinear_rhs /= n;
  out.residual = std::abs(out.lhs - out.rhs);
  out.bilinear_residual = std::abs(out.bilinear_lhs - out.bilinear_rhs);
  return out;
}

/// f_rho(g) = (d_rho/|G|) trace((F f)_rho rho(g)); the components sum to f.
inline ComplexVector rho_component(std::span<const Complex> f, const IrreducibleSetPtr& r, std::size_t rho_index) {
  if (rho_index >= r->size()) throw Error(ErrorKind::index_out_of_range, "no such irreducible", {rho_index});
  FourierImage img = forward(f, r);
  for (std::size_t i = 0; i < img.size(); ++i)
    if (i != rho_index) img[i] = ComplexMatrix(img[i].rows(), img[i].cols());
  return inverse(img);
}

/// f_{rho,j}(g) = (d_rho/|G|) trace((F f)_rho e_j e_j* rho(g)), j zero-based.
inline ComplexVector fine_component(std::span<const Complex> f, const IrreducibleSetPtr& r, std::size_t rho_index,
                                    std::size_t j) {
  if (rho_index >= r->size()) throw Error(ErrorKind::index_out_of_range, "no such irreducible", {rho_index});
  if (j >= (*r)[rho_index].dim()) throw Error(ErrorKind::index_out_of_range, "row index exceeds d_rho", {rho_index, j});
  FourierImage img = forward(f, r);
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (i != rho_index) {
      img[i] = ComplexMatrix(img[i].rows(), img[i].cols());
      continue;
    }
    // B e_j e_j* keeps column j of B.
    ComplexMatrix& b = img[i];
    for (std::size_t row = 0; row < b.rows(); ++row)
      for (std::size_t col = 0; col < b.cols(); ++col)
        if (col != j) b(row, col) = 0.0;
  }
  return inverse(img);
}

/// True when every Fourier block other than rho's is below structural_zero * ||f||.
inline bool is_rho_function(std::span<const Complex> f, const IrreducibleSetPtr& r, std::size_t rho_index,
                            const ToleranceConfig& tol = default_tolerances()) {
  if (rho_index >= r->size()) throw Error(ErrorKind::index_out_of_range, "no such irreducible", {rho_index});
  const FourierImage img = forward(f, r);
  const double scale = norm2(f) * static_cast<double>(r->order());
  for (std::size_t i = 0; i < img.size(); ++i)
    if (i != rho_index && max_abs(img[i]) > tol.structural_zero * scale) return false;
  return true;
}

}  // namespace projframe
