#pragma once

// The algebra M_(G,alpha) of (G,alpha)-matrices
//   M_alpha(nu)_{g,h} = nu(g^{-1}h) / alpha(g, g^{-1}h),
// stored by the defining vector nu.

#include <memory>
#include <sstream>
#include <utility>

#include "projframe/cocycle.hpp"
#include "projframe/error.hpp"
#include "projframe/numerics.hpp"

namespace projframe {

class GAlphaMatrix {
 public:
  GAlphaMatrix(CocyclePtr cocycle, ComplexVector nu) : cocycle_(std::move(cocycle)), nu_(std::move(nu)) {
    if (!cocycle_) throw Error(ErrorKind::invalid_input, "(G,alpha)-matrix without a cocycle");
    if (nu_.size() != cocycle_->order()) throw Error(ErrorKind::dimension_mismatch, "nu length differs from |G|");
  }

  const CocyclePtr& cocycle_ptr() const noexcept { return cocycle_; }
  const Cocycle& cocycle() const noexcept { return *cocycle_; }
  const FiniteGroup& group() const noexcept { return cocycle_->group(); }
  std::size_t order() const noexcept { return nu_.size(); }
  const ComplexVector& nu() const noexcept { return nu_; }

  Complex entry(GroupIndex g, GroupIndex h) const {
    const FiniteGroup& grp = group();
    const GroupIndex x = grp.mul(grp.inv(g), h);
    return nu_[x] / (*cocycle_)(g, x);
  }

 private:
  CocyclePtr cocycle_;
  ComplexVector nu_;
};

inline ComplexMatrix to_dense(const GAlphaMatrix& m) {
  const std::size_t n = m.order();
  ComplexMatrix out(n, n);
  for (GroupIndex g = 0; g < n; ++g)
    for (GroupIndex h = 0; h < n; ++h) out(g, h) = m.entry(g, h);
  return out;
}

/// alpha(1,1) e_1, the identity of the algebra.
inline ComplexVector identity_vector(const Cocycle& c) {
  ComplexVector e(c.order());
  e[0] = c(0, 0);
  return e;
}

/// Reads nu off the identity row (nu(h) = alpha(1,1) a_{1,h}), rebuilds the
/// dense form and accepts when every entry agrees to recognize * (1 + max|a|).
inline GAlphaMatrix recognize(const ComplexMatrix& a, const CocyclePtr& c, const ToleranceConfig& tol = default_tolerances()) {
  const std::size_t n = c->order();
  if (a.rows() != n || a.cols() != n) throw Error(ErrorKind::dimension_mismatch, "matrix size differs from |G|");
  ComplexVector nu(n);
  for (GroupIndex h = 0; h < n; ++h) nu[h] = (*c)(0, 0) * a(0, h);
  GAlphaMatrix m(c, std::move(nu));
  const double limit = tol.recognize * (1.0 + max_abs(a));
  double worst = 0;
  std::size_t wr = 0, wc = 0;
  for (GroupIndex g = 0; g < n; ++g)
    for (GroupIndex h = 0; h < n; ++h) {
      const double dev = std::abs(a(g, h) - m.entry(g, h));
      if (dev > worst) {
        worst = dev;
        wr = g;
        wc = h;
      }
    }
  if (worst > limit) {
    std::ostringstream msg;
    msg << "not a (G,alpha)-matrix: entry (" << wr << ", " << wc << ") deviates by " << worst;
    throw Error(ErrorKind::not_galpha_matrix, msg.str(), {wr, wc});
  }
  return m;
}

/// (nu *_alpha mu)(g) = sum_t nu(g t^{-1}) mu(t) / alpha(g t^{-1}, t)
inline ComplexVector alpha_convolve(std::span<const Complex> nu, std::span<const Complex> mu, const Cocycle& c) {
  const FiniteGroup& g = c.group();
  const std::size_t n = g.order();
  if (nu.size() != n || mu.size() != n) throw Error(ErrorKind::dimension_mismatch, "convolution operands must have length |G|");
  ComplexVector out(n);
  for (GroupIndex x = 0; x < n; ++x)
    for (GroupIndex t = 0; t < n; ++t) {
      const GroupIndex s = g.mul(x, g.inv(t));
      out[x] += nu[s] * mu[t] / c(s, t);
    }
  return out;
}

/// nu^{*,alpha}(a) = conj(nu(a^{-1})) alpha(a, a^{-1}) alpha(1,1), so that
/// M_alpha(nu)* = M_alpha(nu^{*,alpha}) for unitary alpha.
inline ComplexVector star_adjoint(std::span<const Complex> nu, const Cocycle& c) {
  if (!c.is_unitary()) throw Error(ErrorKind::unsupported, "star_adjoint requires a unitary cocycle");
  const FiniteGroup& g = c.group();
  if (nu.size() != g.order()) throw Error(ErrorKind::dimension_mismatch, "nu length differs from |G|");
  ComplexVector out(nu.size());
  for (GroupIndex a = 0; a < g.order(); ++a) out[a] = std::conj(nu[g.inv(a)]) * c(a, g.inv(a)) * c(0, 0);
  return out;
}

inline GAlphaMatrix operator*(const GAlphaMatrix& a, const GAlphaMatrix& b) {
  if (!a.cocycle().same_values(b.cocycle())) throw Error(ErrorKind::group_mismatch, "product of matrices over different cocycles");
  return GAlphaMatrix(a.cocycle_ptr(), alpha_convolve(a.nu(), b.nu(), a.cocycle()));
}

inline GAlphaMatrix adjoint(const GAlphaMatrix& a) { return GAlphaMatrix(a.cocycle_ptr(), star_adjoint(a.nu(), a.cocycle())); }

/// Moore-Penrose pseudoinverse, computed densely and recognized back into the algebra.
inline GAlphaMatrix pseudoinverse(const GAlphaMatrix& m, const ToleranceConfig& tol = default_tolerances()) {
  if (!m.cocycle().is_unitary()) throw Error(ErrorKind::unsupported, "pseudoinverse closure requires a unitary cocycle");
  const ComplexMatrix p = pseudoinverse_dense(to_dense(m), tol);
  try {
    return recognize(p, m.cocycle_ptr(), tol);
  } catch (const Error& e) {
    throw Error(ErrorKind::internal_consistency, std::string("pseudoinverse left the algebra: ") + e.what(), e.witness());
  }
}

/// Same nu over 1/alpha: entries alpha(g, g^{-1}h) nu(g^{-1}h), the [G,alpha]-matrix.
inline GAlphaMatrix to_bracket_variant(const GAlphaMatrix& m) { return GAlphaMatrix(invert(m.cocycle()), m.nu()); }

/// mu(g) = nu(g^{-1}) / (alpha(1,1) alpha(g, g^{-1})); then
/// M_alpha(nu)^T = M_{1/alpha}(mu).
inline ComplexVector transpose_vector(std::span<const Complex> nu, const Cocycle& c) {
  const FiniteGroup& g = c.group();
  if (nu.size() != g.order()) throw Error(ErrorKind::dimension_mismatch, "nu length differs from |G|");
  ComplexVector mu(nu.size());
  for (GroupIndex x = 0; x < g.order(); ++x) mu[x] = nu[g.inv(x)] / (c(0, 0) * c(x, g.inv(x)));
  return mu;
}

/// mu(g) = alpha(1,1) alpha(g, g^{-1}) nu(g^{-1}); then M_{1/alpha}(nu)^T = M_alpha(mu).
inline ComplexVector bracket_transpose_vector(std::span<const Complex> nu, const Cocycle& c) {
  const FiniteGroup& g = c.group();
  if (nu.size() != g.order()) throw Error(ErrorKind::dimension_mismatch, "nu length differs from |G|");
  ComplexVector mu(nu.size());
  for (GroupIndex x = 0; x < g.order(); ++x) mu[x] = c(0, 0) * c(x, g.inv(x)) * nu[g.inv(x)];
  return mu;
}

/// J A J with J e_h = e_{h^{-1}}: entry (g,h) is a_{g^{-1}, h^{-1}}, i.e.
/// nu(g h^{-1}) / alpha(g^{-1}, g h^{-1}) for A = M_alpha(nu).
inline ComplexMatrix j_conjugate(const ComplexMatrix& a, const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (a.rows() != n || a.cols() != n) throw Error(ErrorKind::dimension_mismatch, "matrix size differs from |G|");
  ComplexMatrix out(n, n);
  for (GroupIndex x = 0; x < n; ++x)
    for (GroupIndex y = 0; y < n; ++y) out(x, y) = a(g.inv(x), g.inv(y));
  return out;
}

inline ComplexMatrix j_conjugate(const GAlphaMatrix& m) { return j_conjugate(to_dense(m), m.group()); }

}  // namespace projframe
