#pragma once

// Gramians of projective group orbits (rho(g) v)_g, tightness, frame classes
// and reconstruction of an orbit from its Gramian.

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "projframe/blockdiag.hpp"
#include "projframe/error.hpp"
#include "projframe/fourier.hpp"
#include "projframe/galpha_matrix.hpp"
#include "projframe/numerics.hpp"
#include "projframe/repn.hpp"

namespace projframe {

/// A (G,alpha)-matrix presented as the Gramian of an orbit; entry (g,h) = <phi_h, phi_g>.
struct FrameGramian {
  GAlphaMatrix matrix;
  std::string source;

  const ComplexVector& nu() const noexcept { return matrix.nu(); }
};

/// nu(g) = <rho(g) v, v> = v* rho(g) v
inline FrameGramian gramian_of_orbit(const ProjectiveRep& rep, std::span<const Complex> v) {
  if (!rep.is_unitary()) throw Error(ErrorKind::unsupported, "orbit Gramians need a unitary representation");
  if (v.size() != rep.dim()) throw Error(ErrorKind::dimension_mismatch, "vector length differs from the representation dimension");
  ComplexVector nu(rep.order());
  for (GroupIndex g = 0; g < rep.order(); ++g) nu[g] = inner(rep(g) * v, v);
  return {GAlphaMatrix(rep.cocycle_ptr(), std::move(nu)), rep.label().empty() ? "orbit" : "orbit of " + rep.label()};
}

/// The orbit vectors phi_g = rho(g) v as rows.
inline std::vector<ComplexVector> orbit(const ProjectiveRep& rep, std::span<const Complex> v) {
  std::vector<ComplexVector> out;
  for (GroupIndex g = 0; g < rep.order(); ++g) out.push_back(rep(g) * v);
  return out;
}

inline FourierImage fourier_coefficients(const FrameGramian& g, const IrreducibleSetPtr& r) {
  if (!g.matrix.cocycle().same_values(r->cocycle()))
    throw Error(ErrorKind::group_mismatch, "Gramian and irreducible set use different cocycles");
  return forward(g.nu(), r);
}

struct BlockProjectionCheck {
  std::string label;
  double idempotency_defect = 0;  // ||B^2 - B||_F
  double hermitian_defect = 0;    // ||B* - B||_F
  bool is_projection = false;
};

struct TightnessReport {
  bool tight = false;
  std::vector<BlockProjectionCheck> blocks;
  std::vector<std::string> failing;
};

inline BlockProjectionCheck check_projection(const ComplexMatrix& b, std::string label, const ToleranceConfig& tol) {
  BlockProjectionCheck c{std::move(label), frobenius_norm(b * b - b), frobenius_norm(adjoint(b) - b), false};
  c.is_projection = c.idempotency_defect < tol.projection && c.hermitian_defect < tol.projection;
  return c;
}

/// M_alpha(nu) is an orthogonal projection iff every Fourier block is one.
inline TightnessReport is_tight(const FrameGramian& g, const IrreducibleSetPtr& r, const ToleranceConfig& tol = default_tolerances()) {
  if (!r->cocycle().is_unitary()) throw Error(ErrorKind::unsupported, "tightness needs a unitary cocycle");
  const FourierImage img = fourier_coefficients(g, r);
  TightnessReport rep;
  rep.tight = true;
  for (std::size_t i = 0; i < img.size(); ++i) {
    rep.blocks.push_back(check_projection(img[i], (*r)[i].label(), tol));
    if (!rep.blocks.back().is_projection) {
      rep.tight = false;
      rep.failing.push_back((*r)[i].label());
    }
  }
  return rep;
}

struct FourierBlockSummary {
  std::string label;
  std::size_t dim = 0;
  std::size_t rank = 0;
  bool is_zero = false;
  bool is_projection = false;
  bool is_scalar = false;
  Complex scalar{};  // c with B = c I, when is_scalar
};

struct FrameClass {
  std::string tag;  // harmonic | irreducible | central | homogeneous | general
  bool irreducible = false;
  bool homogeneous = false;
  bool central = false;
  bool harmonic = false;
  bool tight = false;
  std::vector<FourierBlockSummary> details;
};

/// Reports every class flag and picks the most specific tag in the order
/// harmonic, irreducible, central, homogeneous, general.
inline FrameClass classify(const FrameGramian& g, const IrreducibleSetPtr& r, const ToleranceConfig& tol = default_tolerances()) {
  const FourierImage img = fourier_coefficients(g, r);
  double scale = 0;
  for (const auto& b : img.blocks()) scale = std::max(scale, max_abs(b));
  const double zero = tol.structural_zero * std::max(scale, 1.0);

  FrameClass out;
  std::size_t nonzero = 0;
  bool all_zero_or_scalar = true, all_zero_or_one = true, all_projection = true;
  for (std::size_t i = 0; i < img.size(); ++i) {
    const ComplexMatrix& b = img[i];
    FourierBlockSummary s;
    s.label = (*r)[i].label();
    s.dim = b.rows();
    s.is_zero = max_abs(b) <= zero;
    const auto sigma = singular_values(b, tol);
    s.rank = s.is_zero ? 0 : rank_above(sigma, tol.rank_cutoff * std::max(scale, 1.0));
    s.is_projection = check_projection(b, s.label, tol).is_projection;
    const Complex c = trace(b) / static_cast<double>(s.dim);
    s.is_scalar = max_abs_diff(b, c * ComplexMatrix::identity(s.dim)) <= zero;
    if (s.is_scalar) s.scalar = c;
    if (!s.is_zero) ++nonzero;
    if (!s.is_zero && !s.is_scalar) all_zero_or_scalar = false;
    if (!s.is_zero && !(s.is_scalar && std::abs(c - 1.0) <= tol.projection)) all_zero_or_one = false;
    if (!s.is_projection) all_projection = false;
    out.details.push_back(std::move(s));
  }

  out.tight = all_projection;
  out.homogeneous = nonzero == 1;
  out.irreducible = out.homogeneous && std::any_of(out.details.begin(), out.details.end(),
                                                   [](const FourierBlockSummary& s) { return !s.is_zero && s.rank == 1; });
  out.central = all_zero_or_scalar;
  out.harmonic = g.matrix.group().is_abelian() && g.matrix.cocycle().is_trivial(tol.validation) && all_zero_or_one;
  out.tag = out.harmonic ? "harmonic" : out.irreducible ? "irreducible" : out.central ? "central" : out.homogeneous ? "homogeneous" : "general";
  return out;
}

/// M_alpha(sum_{xi in S} (d_xi/|G|) chi_xi); S holds indices into R.
inline FrameGramian central_gramian(const IrreducibleSetPtr& r, const std::vector<std::size_t>& subset) {
  const std::size_t n = r->order();
  ComplexVector nu(n);
  for (std::size_t i : subset) {
    if (i >= r->size()) throw Error(ErrorKind::index_out_of_range, "subset index outside R", {i});
    const auto& xi = (*r)[i];
    const double a = static_cast<double>(xi.dim()) / static_cast<double>(n);
    for (GroupIndex g = 0; g < n; ++g) nu[g] += a * trace(xi(g));
  }
  return {GAlphaMatrix(r->cocycle_ptr(), std::move(nu)), "central"};
}

/// Per xi in R, the vectors sqrt(d_xi/|G|) sqrt(lambda_j) w_{xi,j}; weights hold lambda_j.
struct FrameComponent {
  std::size_t rho = 0;
  std::string label;
  std::vector<ComplexVector> vectors;
  std::vector<double> weights;
};

struct FrameVector {
  std::vector<FrameComponent> components;  // one per member of R, in R's order

  std::size_t dimension() const {
    std::size_t s = 0;
    for (const auto& c : components)
      for (const auto& v : c.vectors) s += v.size();
    return s;
  }
};

/// The representation acting on (+)_xi (C^{d_xi})^{m_xi} by copies of xi, and the
/// concatenated vector v.
struct RealizedFrame {
  std::optional<ProjectiveRep> rep;  // empty when the frame vector is empty
  ComplexVector v;
};

inline RealizedFrame realize(const FrameVector& fv, const IrreducibleSetPtr& r) {
  RealizedFrame out;
  const std::size_t dim = fv.dimension();
  if (dim == 0) return out;
  const std::size_t n = r->order();
  std::vector<ComplexMatrix> mats(n, ComplexMatrix(dim, dim));
  std::size_t offset = 0;
  for (const auto& comp : fv.components) {
    const auto& xi = (*r)[comp.rho];
    for (const auto& w : comp.vectors) {
      const std::size_t d = xi.dim();
      for (GroupIndex g = 0; g < n; ++g)
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) mats[g](offset + i, offset + j) = xi(g)(i, j);
      out.v.insert(out.v.end(), w.begin(), w.end());
      offset += d;
    }
  }
  out.rep.emplace(r->cocycle_ptr(), std::move(mats), "realization");
  return out;
}

inline FrameGramian rebuild_gramian(const FrameVector& fv, const IrreducibleSetPtr& r) {
  const RealizedFrame rf = realize(fv, r);
  if (!rf.rep) return {GAlphaMatrix(r->cocycle_ptr(), ComplexVector(r->order())), "rebuilt"};
  FrameGramian g = gramian_of_orbit(*rf.rep, rf.v);
  g.source = "rebuilt";
  return g;
}

struct Construction {
  FrameVector frame;
  std::optional<ProjectiveRep> rep;
  ComplexVector v;
  FrameGramian rebuilt;
  double residual = 0;  // max entry deviation of the rebuilt dense Gramian
  double scale = 0;     // max entry of the input dense Gramian (at least 1)
};

namespace detail {
inline Construction finish_construction(FrameVector fv, const FrameGramian& input, const IrreducibleSetPtr& r,
                                        const ToleranceConfig& tol) {
  RealizedFrame rf = realize(fv, r);
  FrameGramian rebuilt = rf.rep ? gramian_of_orbit(*rf.rep, rf.v) : FrameGramian{GAlphaMatrix(r->cocycle_ptr(), ComplexVector(r->order())), ""};
  rebuilt.source = "rebuilt";
  const ComplexMatrix a = to_dense(input.matrix), b = to_dense(rebuilt.matrix);
  const double scale = std::max(1.0, max_abs(a));
  const double residual = max_abs_diff(a, b);
  if (residual > tol.gramian_residual * scale) {
    std::ostringstream msg;
    msg << "rebuilt Gramian deviates by " << residual;
    throw Error(ErrorKind::internal_consistency, msg.str());
  }
  return {std::move(fv), std::move(rf.rep), std::move(rf.v), std::move(rebuilt), residual, scale};
}

inline ComplexVector column(const ComplexMatrix& m, std::size_t j, double factor) {
  ComplexVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = factor * m(i, j);
  return out;
}
}  // namespace detail

/// Rebuilds (v, rho) from a projection Gramian: each Fourier block B_xi = sum_j w w*
/// with orthonormal w taken from the eigenvalue-1 eigenvectors (the standard basis
/// when B_xi = I), and v_{xi,j} = sqrt(d_xi/|G|) w_{xi,j}.
inline Construction construct_frame(const FrameGramian& g, const IrreducibleSetPtr& r, const ToleranceConfig& tol = default_tolerances()) {
  const TightnessReport tight = is_tight(g, r, tol);
  if (!tight.tight) {
    std::string which;
    for (const auto& l : tight.failing) which += (which.empty() ? "" : ", ") + l;
    throw Error(ErrorKind::precondition_violation, "Fourier coefficient is not an orthogonal projection at " + which);
  }
  const FourierImage img = fourier_coefficients(g, r);
  const double n = static_cast<double>(r->order());
  FrameVector fv;
  for (std::size_t i = 0; i < img.size(); ++i) {
    const auto& xi = (*r)[i];
    const std::size_t d = xi.dim();
    const double factor = std::sqrt(static_cast<double>(d) / n);
    FrameComponent comp{i, xi.label(), {}, {}};
    const ComplexMatrix& b = img[i];
    if (max_abs_diff(b, ComplexMatrix::identity(d)) < tol.projection) {
      for (std::size_t j = 0; j < d; ++j) {
        ComplexVector e(d);
        e[j] = factor;
        comp.vectors.push_back(std::move(e));
        comp.weights.push_back(1.0);
      }
    } else {
      const HermitianEigen eig = hermitian_eigendecomposition(0.5 * (b + adjoint(b)), tol);
      for (std::size_t j = 0; j < d; ++j) {
        const double lam = eig.values[j];
        if (std::min(std::abs(lam), std::abs(lam - 1.0)) > tol.eigen_cluster) {
          std::ostringstream msg;
          msg << "eigenvalue " << lam << " of the " << xi.label() << " block is not near 0 or 1";
          throw Error(ErrorKind::numerical_degeneracy, msg.str(), {i, j});
        }
        if (lam < tol.eigen_gap) continue;
        comp.vectors.push_back(detail::column(eig.vectors, j, factor));
        comp.weights.push_back(1.0);
      }
    }
    fv.components.push_back(std::move(comp));
  }
  return detail::finish_construction(std::move(fv), g, r, tol);
}

/// General frames: B_xi = sum lambda_j w w* with lambda_j > 0, and w replaced by sqrt(lambda_j) w.
inline Construction construct_from_psd(const FrameGramian& g, const IrreducibleSetPtr& r, const ToleranceConfig& tol = default_tolerances()) {
  const FourierImage img = fourier_coefficients(g, r);
  double scale = 0;
  for (const auto& b : img.blocks()) scale = std::max(scale, frobenius_norm(b));
  const double floor = std::max(scale, 1e-300);
  const double n = static_cast<double>(r->order());
  FrameVector fv;
  for (std::size_t i = 0; i < img.size(); ++i) {
    const auto& xi = (*r)[i];
    const ComplexMatrix& b = img[i];
    if (hermitian_defect(b) > tol.psd * floor)
      throw Error(ErrorKind::not_a_gramian, "Fourier coefficient at " + xi.label() + " is not Hermitian", {i});
    const HermitianEigen eig = hermitian_eigendecomposition(0.5 * (b + adjoint(b)), tol);
    const double factor = std::sqrt(static_cast<double>(xi.dim()) / n);
    FrameComponent comp{i, xi.label(), {}, {}};
    for (std::size_t j = eig.values.size(); j-- > 0;) {
      const double lam = eig.values[j];
      if (lam < -tol.psd * floor) {
        std::ostringstream msg;
        msg << "Fourier coefficient at " << xi.label() << " has negative eigenvalue " << lam;
        throw Error(ErrorKind::not_a_gramian, msg.str(), {i, j});
      }
      if (lam <= tol.rank_cutoff * floor) continue;
      comp.vectors.push_back(detail::column(eig.vectors, j, factor * std::sqrt(lam)));
      comp.weights.push_back(lam);
    }
    fv.components.push_back(std::move(comp));
  }
  return detail::finish_construction(std::move(fv), g, r, tol);
}

/// A representation given explicitly as a direct sum of members of R, with the
/// component v_j of the vector in each summand.
struct BlockFormRep {
  IrreducibleSetPtr irreducibles;
  std::vector<std::size_t> summands;          // index into R of each summand V_j
  std::vector<ComplexVector> components;      // v_j in C^{d}

  ProjectiveRep rep() const {
    FrameVector fv;
    for (std::size_t j = 0; j < summands.size(); ++j) fv.components.push_back({summands[j], "", {components[j]}, {1.0}});
    RealizedFrame rf = realize(fv, irreducibles);
    if (!rf.rep) throw Error(ErrorKind::invalid_input, "block-form representation has no summands");
    return *rf.rep;
  }

  ComplexVector vector() const {
    ComplexVector v;
    for (const auto& c : components) v.insert(v.end(), c.begin(), c.end());
    return v;
  }
};

struct OrbitConditionReport {
  std::vector<double> norm_defects;                     // | ||v_j||^2 - d_j/|G| |
  std::vector<std::pair<std::size_t, std::size_t>> non_orthogonal;  // isomorphic pairs with <v_j, v_k> != 0
  bool norms_ok = true;
  bool orthogonality_ok = true;
  bool tight = false;          // verdict from the two conditions
  bool gramian_tight = false;  // is_tight(Gramian) and rank = dim V
};

/// Orbit-side tightness conditions: ||v_j||^2 = dim V_j / |G| and, for isomorphic
/// summands (equal members of R, so sigma is the identity), <v_j, v_k> = 0.
inline OrbitConditionReport check_orbit_tightness_conditions(const BlockFormRep& b, const ToleranceConfig& tol = default_tolerances()) {
  const IrreducibleSetPtr& r = b.irreducibles;
  if (!r) throw Error(ErrorKind::invalid_input, "block-form representation without an irreducible set");
  if (b.summands.size() != b.components.size())
    throw Error(ErrorKind::unsupported, "block form needs one component per summand");
  const double n = static_cast<double>(r->order());
  OrbitConditionReport out;
  std::size_t dim_v = 0;
  for (std::size_t j = 0; j < b.summands.size(); ++j) {
    if (b.summands[j] >= r->size()) throw Error(ErrorKind::unsupported, "summand is not a member of R", {j});
    const std::size_t d = (*r)[b.summands[j]].dim();
    if (b.components[j].size() != d) throw Error(ErrorKind::dimension_mismatch, "component length differs from its summand", {j});
    dim_v += d;
    const double defect = std::abs(std::real(inner(b.components[j], b.components[j])) - static_cast<double>(d) / n);
    out.norm_defects.push_back(defect);
    if (defect > tol.projection) out.norms_ok = false;
  }
  for (std::size_t j = 0; j < b.summands.size(); ++j)
    for (std::size_t k = j + 1; k < b.summands.size(); ++k)
      if (b.summands[j] == b.summands[k] && std::abs(inner(b.components[j], b.components[k])) > tol.projection) {
        out.orthogonality_ok = false;
        out.non_orthogonal.emplace_back(j, k);
      }
  out.tight = out.norms_ok && out.orthogonality_ok;

  const FrameGramian g = gramian_of_orbit(b.rep(), b.vector());
  const TightnessReport t = is_tight(g, r, tol);
  out.gramian_tight = t.tight && numerical_rank(to_dense(g.matrix), tol) == dim_v;
  return out;
}

}  // namespace projframe
