#pragma once

// Projective representations rho(g) rho(h) = alpha(g,h) rho(gh), alpha-characters
// and complete sets of irreducibles.

#include <cmath>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "projframe/cocycle.hpp"
#include "projframe/error.hpp"
#include "projframe/group.hpp"
#include "projframe/numerics.hpp"
#include "projframe/roots.hpp"

namespace projframe {

/// d x d matrix whose entries are zero or exact roots of unity.
using ExactMatrix = std::vector<std::vector<ExactEntry>>;

inline ComplexMatrix to_complex(const ExactMatrix& m) {
  const std::size_t r = m.size();
  const std::size_t c = r == 0 ? 0 : m.front().size();
  ComplexMatrix out(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) out(i, j) = value_of(m[i][j]);
  return out;
}

class ProjectiveRep {
 public:
  ProjectiveRep(CocyclePtr cocycle, std::vector<ComplexMatrix> matrices, std::string label = {})
      : cocycle_(std::move(cocycle)), matrices_(std::move(matrices)), label_(std::move(label)) {
    init();
  }

  ProjectiveRep(CocyclePtr cocycle, std::vector<ExactMatrix> exact, std::string label = {})
      : cocycle_(std::move(cocycle)), exact_(std::move(exact)), label_(std::move(label)) {
    matrices_.reserve(exact_->size());
    for (const auto& m : *exact_) matrices_.push_back(to_complex(m));
    init();
  }

  const CocyclePtr& cocycle_ptr() const noexcept { return cocycle_; }
  const Cocycle& cocycle() const noexcept { return *cocycle_; }
  const FiniteGroup& group() const noexcept { return cocycle_->group(); }
  std::size_t order() const noexcept { return matrices_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  const ComplexMatrix& operator()(GroupIndex g) const { return matrices_.at(g); }
  const std::vector<ComplexMatrix>& matrices() const noexcept { return matrices_; }
  const std::optional<std::vector<ExactMatrix>>& exact() const noexcept { return exact_; }
  bool is_unitary() const noexcept { return unitary_; }
  const std::string& label() const noexcept { return label_; }

  ProjectiveRep relabeled(std::string label) const {
    ProjectiveRep r = *this;
    r.label_ = std::move(label);
    return r;
  }

 private:
  void init() {
    if (!cocycle_) throw Error(ErrorKind::invalid_input, "representation without a cocycle");
    if (matrices_.size() != cocycle_->order())
      throw Error(ErrorKind::dimension_mismatch, "representation needs one matrix per group element");
    dim_ = matrices_.front().rows();
    if (dim_ == 0) throw Error(ErrorKind::dimension_mismatch, "representation dimension must be positive");
    for (std::size_t g = 0; g < matrices_.size(); ++g)
      if (matrices_[g].rows() != dim_ || matrices_[g].cols() != dim_)
        throw Error(ErrorKind::dimension_mismatch, "representation matrices must all be d x d", {g});
    const ComplexMatrix id = ComplexMatrix::identity(dim_);
    unitary_ = true;
    for (const auto& m : matrices_)
      if (max_abs_diff(adjoint(m) * m, id) > default_tolerances().validation) unitary_ = false;
  }

  CocyclePtr cocycle_;
  std::vector<ComplexMatrix> matrices_;
  std::optional<std::vector<ExactMatrix>> exact_;
  std::string label_;
  std::size_t dim_ = 0;
  bool unitary_ = false;
};

/// Checks rho(g) rho(h) = alpha(g,h) rho(gh) on all pairs; reports the largest
/// deviation and the first failing pair.
inline ValidationReport validate_rep(const ProjectiveRep& r, const ToleranceConfig& tol = default_tolerances()) {
  const FiniteGroup& g = r.group();
  const std::size_t n = g.order();
  ValidationReport report;
  double scale = 1.0;
  for (const auto& m : r.matrices()) scale = std::max(scale, max_abs(m));
  for (GroupIndex a = 0; a < n; ++a)
    for (GroupIndex b = 0; b < n; ++b) {
      const double dev = max_abs_diff(r(a) * r(b), r.cocycle()(a, b) * r(g.mul(a, b)));
      report.max_deviation = std::max(report.max_deviation, dev);
      if (report.ok && dev > tol.validation * scale * scale) {
        report.ok = false;
        report.witness = {a, b};
        std::ostringstream msg;
        msg << "rho(g)rho(h) != alpha(g,h) rho(gh) at (g,h) = (" << g.element_name(a) << ", " << g.element_name(b)
            << "), deviation " << dev;
        report.message = msg.str();
      }
    }
  if (report.ok) report.message = "valid projective representation";
  return report;
}

/// Regular alpha-representation rho(g) e_h = alpha(g,h) e_{gh}.
inline ProjectiveRep regular_rep(const CocyclePtr& c) {
  const FiniteGroup& g = c->group();
  const std::size_t n = g.order();
  if (c->is_exact()) {
    std::vector<ExactMatrix> mats(n, ExactMatrix(n, std::vector<ExactEntry>(n)));
    for (GroupIndex a = 0; a < n; ++a)
      for (GroupIndex h = 0; h < n; ++h) mats[a][g.mul(a, h)][h] = *c->entry(a, h).exact();
    return ProjectiveRep(c, std::move(mats), "regular");
  }
  std::vector<ComplexMatrix> mats(n, ComplexMatrix(n, n));
  for (GroupIndex a = 0; a < n; ++a)
    for (GroupIndex h = 0; h < n; ++h) mats[a](g.mul(a, h), h) = (*c)(a, h);
  return ProjectiveRep(c, std::move(mats), "regular");
}

/// rho1 (+) rho2, block diagonal.
inline ProjectiveRep direct_sum(const ProjectiveRep& r1, const ProjectiveRep& r2, std::string label = {}) {
  if (!r1.cocycle().same_values(r2.cocycle()))
    throw Error(ErrorKind::incomparable, "direct sum of representations with different cocycles");
  const std::size_t d1 = r1.dim(), d = d1 + r2.dim();
  std::vector<ComplexMatrix> mats;
  for (GroupIndex g = 0; g < r1.order(); ++g) {
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t j = 0; j < d1; ++j) m(i, j) = r1(g)(i, j);
    for (std::size_t i = 0; i < r2.dim(); ++i)
      for (std::size_t j = 0; j < r2.dim(); ++j) m(d1 + i, d1 + j) = r2(g)(i, j);
    mats.push_back(std::move(m));
  }
  return ProjectiveRep(r1.cocycle_ptr(), std::move(mats), std::move(label));
}

/// T rho T* for a unitary T.
inline ProjectiveRep conjugate_unitary(const ProjectiveRep& r, const ComplexMatrix& t, std::string label = {}) {
  if (t.rows() != r.dim() || !t.square()) throw Error(ErrorKind::dimension_mismatch, "conjugating matrix has wrong size");
  const ComplexMatrix ts = adjoint(t);
  std::vector<ComplexMatrix> mats;
  for (const auto& m : r.matrices()) mats.push_back(t * m * ts);
  return ProjectiveRep(r.cocycle_ptr(), std::move(mats), std::move(label));
}

struct AlphaCharacter {
  ComplexVector values;
  std::size_t dim = 0;
};

inline AlphaCharacter character(const ProjectiveRep& r) {
  AlphaCharacter chi{ComplexVector(r.order()), r.dim()};
  for (GroupIndex g = 0; g < r.order(); ++g) chi.values[g] = trace(r(g));
  return chi;
}

namespace detail {
inline void require_unitary(const ProjectiveRep& r, const char* what) {
  if (!r.is_unitary())
    throw Error(ErrorKind::unsupported, std::string(what) + " requires a unitary representation (unitarize first)");
}
}  // namespace detail

/// <chi,chi>/|G| is a positive integer for unitary reps; irreducible iff it is 1.
inline bool is_irreducible(const ProjectiveRep& r, const ToleranceConfig& tol = default_tolerances()) {
  detail::require_unitary(r, "is_irreducible");
  const AlphaCharacter chi = character(r);
  const double n = static_cast<double>(r.order());
  const double q = std::real(inner(chi.values, chi.values)) / n;
  if (std::abs(q - std::round(q)) > tol.integrality)
    throw Error(ErrorKind::inconsistent_input, "<chi,chi>/|G| is not an integer; not a valid unitary representation");
  return std::abs(q - 1.0) < tol.irreducibility;
}

/// Equivalence at a fixed cocycle via character orthogonality.
inline bool are_equivalent(const ProjectiveRep& r1, const ProjectiveRep& r2) {
  if (!same_group(r1.group(), r2.group()) || !r1.cocycle().same_values(r2.cocycle()))
    throw Error(ErrorKind::incomparable, "representations have different cocycle tables");
  detail::require_unitary(r1, "are_equivalent");
  detail::require_unitary(r2, "are_equivalent");
  if (r1.dim() != r2.dim()) return false;
  const AlphaCharacter c1 = character(r1), c2 = character(r2);
  return std::abs(inner(c1.values, c2.values)) > static_cast<double>(r1.order()) / 2.0;
}

/// m_xi = <chi_total, chi_xi>/|G|, required to be a nonnegative integer.
inline std::size_t multiplicity(const AlphaCharacter& chi_total, const ProjectiveRep& xi,
                                const ToleranceConfig& tol = default_tolerances()) {
  detail::require_unitary(xi, "multiplicity");
  if (chi_total.values.size() != xi.order()) throw Error(ErrorKind::dimension_mismatch, "character length differs from |G|");
  const Complex q = inner(chi_total.values, character(xi).values) / static_cast<double>(xi.order());
  const double rounded = std::round(q.real());
  if (std::abs(q - Complex(rounded)) > tol.integrality || rounded < 0)
    throw Error(ErrorKind::inconsistent_input, "character inner product is not a nonnegative integer multiple of |G|");
  return static_cast<std::size_t>(rounded);
}

/// A complete set R of inequivalent irreducibles for one cocycle, in a fixed order.
class IrreducibleSet {
 public:
  IrreducibleSet(CocyclePtr cocycle, std::vector<ProjectiveRep> reps) : cocycle_(std::move(cocycle)), reps_(std::move(reps)) {
    if (reps_.empty()) throw Error(ErrorKind::incomplete_set, "irreducible set is empty");
    for (std::size_t i = 0; i < reps_.size(); ++i) {
      if (!reps_[i].cocycle().same_values(*cocycle_))
        throw Error(ErrorKind::incomparable, "member of the irreducible set uses a different cocycle", {i});
      if (reps_[i].label().empty()) reps_[i] = reps_[i].relabeled("rho" + std::to_string(i + 1));
    }
  }

  const CocyclePtr& cocycle_ptr() const noexcept { return cocycle_; }
  const Cocycle& cocycle() const noexcept { return *cocycle_; }
  const FiniteGroup& group() const noexcept { return cocycle_->group(); }
  std::size_t order() const noexcept { return cocycle_->order(); }
  std::size_t size() const noexcept { return reps_.size(); }
  const ProjectiveRep& operator[](std::size_t i) const { return reps_.at(i); }
  const std::vector<ProjectiveRep>& reps() const noexcept { return reps_; }
  auto begin() const { return reps_.begin(); }
  auto end() const { return reps_.end(); }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (const auto& r : reps_) out.push_back(r.label());
    return out;
  }

  std::optional<std::size_t> find(const std::string& label) const {
    for (std::size_t i = 0; i < reps_.size(); ++i)
      if (reps_[i].label() == label) return i;
    return std::nullopt;
  }

  std::size_t dimension_sum_of_squares() const {
    std::size_t s = 0;
    for (const auto& r : reps_) s += r.dim() * r.dim();
    return s;
  }

  bool all_unitary() const {
    return std::all_of(reps_.begin(), reps_.end(), [](const ProjectiveRep& r) { return r.is_unitary(); });
  }

 private:
  CocyclePtr cocycle_;
  std::vector<ProjectiveRep> reps_;
};

using IrreducibleSetPtr = std::shared_ptr<const IrreducibleSet>;

inline IrreducibleSetPtr make_irreducible_set(CocyclePtr c, std::vector<ProjectiveRep> reps) {
  return std::make_shared<const IrreducibleSet>(std::move(c), std::move(reps));
}

/// Checks sum d^2 = |G|, unitarity, irreducibility, pairwise character
/// orthogonality and orthogonality of coordinates
///   <rho_jk, xi_ml> = (|G|/d) delta_{rho,xi} delta_jm delta_kl.
inline ValidationReport validate_complete_set(const IrreducibleSet& s, const ToleranceConfig& tol = default_tolerances()) {
  ValidationReport report;
  const std::size_t n = s.order();
  const double nd = static_cast<double>(n);
  auto fail = [&](std::string msg, std::vector<std::size_t> witness) {
    if (!report.ok) return;
    report.ok = false;
    report.message = std::move(msg);
    report.witness = std::move(witness);
  };

  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto rep_report = validate_rep(s[i], tol);
    if (!rep_report.ok) fail("member " + s[i].label() + ": " + rep_report.message, {i});
    if (!s[i].is_unitary()) fail("member " + s[i].label() + " is not unitary", {i});
  }
  if (!report.ok) return report;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!is_irreducible(s[i], tol)) fail("member " + s[i].label() + " is reducible", {i});

  if (s.dimension_sum_of_squares() != n) {
    std::ostringstream msg;
    msg << "sum of squared dimensions is " << s.dimension_sum_of_squares() << ", expected |G| = " << n;
    fail(msg.str(), {});
  }

  std::vector<AlphaCharacter> chars;
  for (const auto& r : s) chars.push_back(character(r));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const double v = std::abs(inner(chars[i].values, chars[j].values));
      report.max_deviation = std::max(report.max_deviation, v);
      if (v > tol.irreducibility * nd) fail("members " + s[i].label() + " and " + s[j].label() + " are equivalent", {i, j});
    }

  for (std::size_t p = 0; p < s.size(); ++p)
    for (std::size_t q = 0; q < s.size(); ++q) {
      const auto& rho = s[p];
      const auto& xi = s[q];
      for (std::size_t j = 0; j < rho.dim(); ++j)
        for (std::size_t k = 0; k < rho.dim(); ++k)
          for (std::size_t m = 0; m < xi.dim(); ++m)
            for (std::size_t l = 0; l < xi.dim(); ++l) {
              Complex ip{};
              for (GroupIndex g = 0; g < n; ++g) ip += rho(g)(j, k) * std::conj(xi(g)(m, l));
              const double expected = (p == q && j == m && k == l) ? nd / static_cast<double>(rho.dim()) : 0.0;
              const double dev = std::abs(ip - expected);
              report.max_deviation = std::max(report.max_deviation, dev);
              if (dev > tol.irreducibility * nd)
                fail("orthogonality of coordinates fails between " + rho.label() + " and " + xi.label(), {p, q, j, k, m, l});
            }
    }
  if (report.ok) report.message = "complete set of irreducibles";
  return report;
}

/// f(h g h^{-1}) = alpha(hgh^{-1}, h)/alpha(h, g) f(g) for all g, h.
inline bool is_alpha_class_function(std::span<const Complex> f, const Cocycle& c,
                                    const ToleranceConfig& tol = default_tolerances()) {
  const FiniteGroup& g = c.group();
  if (f.size() != g.order()) throw Error(ErrorKind::dimension_mismatch, "function length differs from |G|");
  const double scale = std::max(1.0, max_abs(f));
  for (GroupIndex x = 0; x < g.order(); ++x)
    for (GroupIndex h = 0; h < g.order(); ++h) {
      const GroupIndex y = g.conjugate(x, h);
      if (std::abs(f[y] - c(y, h) / c(h, x) * f[x]) > tol.validation * scale) return false;
    }
  return true;
}

/// Dimension of the space of alpha-class functions, computed as the nullity of
/// the linear constraints defining it.
inline std::size_t alpha_class_function_dimension(const Cocycle& c, const ToleranceConfig& tol = default_tolerances()) {
  const FiniteGroup& g = c.group();
  const std::size_t n = g.order();
  ComplexMatrix constraints(n * n, n);
  for (GroupIndex x = 0; x < n; ++x)
    for (GroupIndex h = 0; h < n; ++h) {
      const std::size_t row = x * n + h;
      const GroupIndex y = g.conjugate(x, h);
      constraints(row, y) += 1.0;
      constraints(row, x) -= c(y, h) / c(h, x);
    }
  const auto sigma = singular_values(adjoint(constraints) * constraints, tol);
  const double top = sigma.empty() ? 0.0 : sigma.front();
  return n - rank_above(sigma, tol.rank_cutoff * std::max(top, 1.0));
}

// ---------------------------------------------------------------------------
// Built-in irreducible sets.

namespace detail {
inline ExactEntry r(std::int64_t num, std::int64_t den) { return RootOfUnity(num, den); }
inline ExactMatrix diag2(ExactEntry a, ExactEntry b) { return {{a, std::nullopt}, {std::nullopt, b}}; }
inline ExactMatrix anti2(ExactEntry a, ExactEntry b) { return {{std::nullopt, a}, {b, std::nullopt}}; }
}  // namespace detail

/// The two-dimensional irreducible for the nontrivial Klein cocycle:
/// rho(1) = I, rho(a) = swap, rho(b) = diag(1,-1), rho(ab) = [[0,-1],[1,0]].
inline ProjectiveRep klein_rep(const CocyclePtr& c = klein_cocycle()) {
  using detail::r;
  std::vector<ExactMatrix> m{
      detail::diag2(r(0, 1), r(0, 1)),
      detail::anti2(r(0, 1), r(0, 1)),
      detail::diag2(r(0, 1), r(1, 2)),
      detail::anti2(r(1, 2), r(0, 1)),
  };
  return ProjectiveRep(c, std::move(m), "rho");
}

/// T rho T^{-1} with T = (1/sqrt 2)[[1,1],[1,-1]]:
/// rho~(a) = diag(1,-1), rho~(b) = swap, rho~(ab) = [[0,1],[-1,0]].
inline ProjectiveRep klein_rep_tilde(const CocyclePtr& c = klein_cocycle()) {
  using detail::r;
  std::vector<ExactMatrix> m{
      detail::diag2(r(0, 1), r(0, 1)),
      detail::diag2(r(0, 1), r(1, 2)),
      detail::anti2(r(0, 1), r(0, 1)),
      detail::anti2(r(0, 1), r(1, 2)),
  };
  return ProjectiveRep(c, std::move(m), "rho_tilde");
}

inline IrreducibleSetPtr klein_irreducibles() {
  const CocyclePtr c = klein_cocycle();
  return make_irreducible_set(c, {klein_rep(c)});
}

/// rho_r(a^j b^k) = diag(i^r, i^{1-r})^j swap^k, r = 1, 2, for the D8 cocycle i^{kl}.
inline ProjectiveRep dihedral8_rep(int which, const CocyclePtr& c = dihedral_cocycle(4)) {
  if (which != 1 && which != 2) throw Error(ErrorKind::index_out_of_range, "D8 projective irreducibles are rho1, rho2");
  std::vector<ExactMatrix> m;
  for (std::int64_t k = 0; k < 2; ++k)
    for (std::int64_t j = 0; j < 4; ++j) {
      const ExactEntry top = RootOfUnity::i_pow(which * j);
      const ExactEntry bottom = RootOfUnity::i_pow((1 - which) * j);
      m.push_back(k == 0 ? detail::diag2(top, bottom) : detail::anti2(top, bottom));
    }
  return ProjectiveRep(c, std::move(m), "rho" + std::to_string(which));
}

inline IrreducibleSetPtr dihedral8_irreducibles() {
  const CocyclePtr c = dihedral_cocycle(4);
  return make_irreducible_set(c, {dihedral8_rep(1, c), dihedral8_rep(2, c)});
}

/// Characters of an abelian group for the trivial cocycle, with exact values.
/// Built by extending characters one cyclic layer at a time: adjoining g of
/// order k modulo the current subgroup H, each character of H extends in k ways.
/// For Z_n this is the DFT basis chi_j(k) = e^{2 pi i jk/n}.
inline IrreducibleSetPtr abelian_trivial_irreducibles(const GroupPtr& group) {
  const FiniteGroup& g = *group;
  if (!g.is_abelian()) throw Error(ErrorKind::unsupported, "abelian_trivial_irreducibles needs an abelian group");
  const std::size_t n = g.order();
  std::vector<bool> in_h(n, false);
  in_h[0] = true;
  std::vector<GroupIndex> h_elems{0};
  // chars[c][x] is defined for x in H.
  std::vector<std::vector<RootOfUnity>> chars{std::vector<RootOfUnity>(n)};

  for (GroupIndex x = 1; x < n; ++x) {
    if (in_h[x]) continue;
    std::size_t k = 1;
    GroupIndex xk = x;
    while (!in_h[xk]) {
      xk = g.mul(xk, x);
      ++k;
    }
    std::vector<GroupIndex> new_elems;
    for (std::size_t i = 0; i < k; ++i)
      for (GroupIndex h : h_elems) new_elems.push_back(g.mul(h, g.power(x, i)));

    std::vector<std::vector<RootOfUnity>> next;
    for (std::size_t j = 0; j < k; ++j)
      for (const auto& chi : chars) {
        const RootOfUnity base = chi[xk];
        const auto kk = static_cast<std::int64_t>(k);
        const RootOfUnity on_x(base.num() + static_cast<std::int64_t>(j) * base.den(), base.den() * kk);
        std::vector<RootOfUnity> ext(n);
        for (std::size_t i = 0; i < k; ++i)
          for (GroupIndex h : h_elems) ext[g.mul(h, g.power(x, i))] = chi[h] * on_x.pow(static_cast<std::int64_t>(i));
        next.push_back(std::move(ext));
      }
    chars = std::move(next);
    for (GroupIndex e : new_elems) in_h[e] = true;
    h_elems = std::move(new_elems);
  }

  const CocyclePtr c = trivial_cocycle(group);
  std::vector<ProjectiveRep> reps;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    std::vector<ExactMatrix> m;
    for (GroupIndex x = 0; x < n; ++x) m.push_back({{chars[i][x]}});
    reps.emplace_back(c, std::move(m), "chi" + std::to_string(i));
  }
  return make_irreducible_set(c, std::move(reps));
}

/// Ordinary irreducibles of D_{2m}: the one-dimensional characters followed by
/// rho_h(a^j b^k) = diag(w^{hj}, w^{-hj}) swap^k, w = e^{2 pi i/m}, 1 <= h < m/2.
inline IrreducibleSetPtr dihedral_ordinary_irreducibles(std::size_t m) {
  const GroupPtr group = make_dihedral(m);
  const CocyclePtr c = trivial_cocycle(group);
  const std::size_t n = 2 * m;
  const auto mm = static_cast<std::int64_t>(m);
  std::vector<ProjectiveRep> reps;
  const int s_choices = (m % 2 == 0) ? 2 : 1;
  int count = 0;
  for (int s = 0; s < s_choices; ++s)
    for (int t = 0; t < 2; ++t) {
      std::vector<ExactMatrix> mats;
      for (GroupIndex x = 0; x < n; ++x) {
        const std::int64_t j = static_cast<std::int64_t>(x % m), k = static_cast<std::int64_t>(x / m);
        mats.push_back({{RootOfUnity(s * j + t * k, 2)}});
      }
      reps.emplace_back(c, std::move(mats), "chi" + std::to_string(count++));
    }
  for (std::int64_t h = 1; 2 * h < mm; ++h) {
    std::vector<ExactMatrix> mats;
    for (GroupIndex x = 0; x < n; ++x) {
      const std::int64_t j = static_cast<std::int64_t>(x % m), k = static_cast<std::int64_t>(x / m);
      const ExactEntry top = RootOfUnity(h * j, mm);
      const ExactEntry bottom = RootOfUnity(-h * j, mm);
      mats.push_back(k == 0 ? detail::diag2(top, bottom) : detail::anti2(top, bottom));
    }
    reps.emplace_back(c, std::move(mats), "rho" + std::to_string(h));
  }
  return make_irreducible_set(c, std::move(reps));
}

}  // namespace projframe
