#pragma once

// Acceptance criteria 1-11. Each check returns one line: PASS/FAIL, an id,
// a short name and the measured quantities.

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "projframe/projframe.hpp"

namespace projframe::acceptance {

struct Result {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

namespace detail {

inline std::string sci(double x) {
  std::ostringstream s;
  s.precision(2);
  s << std::scientific << x;
  return s.str();
}

inline ComplexVector random_nu(std::size_t n, Rng& rng) { return random_vector(n, rng); }

// Reference matrices are written with 1, -1, i, -i, 0 as the symbols below.
inline ExactEntry sym(char c) {
  switch (c) {
    case '1': return RootOfUnity(0, 1);
    case '-': return RootOfUnity(1, 2);
    case 'i': return RootOfUnity(1, 4);
    case 'j': return RootOfUnity(3, 4);  // -i
    default: return std::nullopt;
  }
}

inline ExactMatrixScaled scaled_matrix(const std::vector<std::string>& rows, Rational scale_sq) {
  ExactMatrixScaled m;
  for (const auto& r : rows) {
    std::vector<ExactEntry> row;
    for (char c : r) row.push_back(sym(c));
    m.entries.push_back(std::move(row));
  }
  m.column_scale_sq.assign(rows.size(), scale_sq);
  return m;
}

// Klein indices: nu00 = nu(1), nu10 = nu(a), nu01 = nu(b), nu11 = nu(ab).
inline Complex klein_alpha_det(const ComplexVector& v) {
  const Complex s = v[0] * v[0] + v[3] * v[3] - v[1] * v[1] - v[2] * v[2];
  return s * s;
}

inline Complex klein_trivial_det(const ComplexVector& v) {
  return (v[0] + v[1] + v[2] + v[3]) * (v[0] - v[1] + v[2] - v[3]) * (v[0] + v[1] - v[2] - v[3]) *
         (v[0] - v[1] - v[2] + v[3]);
}

// D8 order 1, a, a^2, a^3, b, ab, a^2b, a^3b.
inline ComplexMatrix d8_block_rho1(const ComplexVector& v) {
  const Complex i{0, 1};
  return {{v[0] - i * v[1] - v[2] + i * v[3], v[4] + v[5] + v[6] + v[7]},
          {v[4] - i * v[5] - v[6] + i * v[7], v[0] + v[1] + v[2] + v[3]}};
}

inline ComplexMatrix d8_block_rho2(const ComplexVector& v) {
  const Complex i{0, 1};
  return {{v[0] - v[1] + v[2] - v[3], v[4] + i * v[5] - v[6] - i * v[7]},
          {v[4] - v[5] + v[6] - v[7], v[0] + i * v[1] - v[2] - i * v[3]}};
}

/// Random (G,alpha)-matrix of random rank: each Fourier block is X_r Y_r* with random inner rank.
inline ComplexVector random_low_rank_nu(const IrreducibleSetPtr& r, Rng& rng) {
  std::vector<ComplexMatrix> blocks;
  for (const auto& rho : *r) {
    std::uniform_int_distribution<std::size_t> k_dist(0, rho.dim());
    const std::size_t k = k_dist(rng);
    const ComplexMatrix x = random_matrix(rho.dim(), k == 0 ? 1 : k, rng);
    const ComplexMatrix y = random_matrix(rho.dim(), k == 0 ? 1 : k, rng);
    blocks.push_back(k == 0 ? ComplexMatrix(rho.dim(), rho.dim()) : x * adjoint(y));
  }
  return inverse(FourierImage(r, std::move(blocks)));
}

inline bool dense_is_projection(const ComplexMatrix& p, double tol) {
  return max_abs(p * p - p) < tol && max_abs(adjoint(p) - p) < tol;
}

/// Gramian of tight random frame with at least one nonzero Fourier block.
inline FrameGramian nonzero_tight_gramian(const IrreducibleSetPtr& r, Rng& rng) {
  for (;;) {
    FrameGramian g = random_tight_gramian(r, rng);
    if (max_abs(g.nu()) > 1e-6) return g;
  }
}

}  // namespace detail

inline Result klein_determinant(std::uint64_t seed) {
  Rng rng(seed);
  const IrreducibleSetPtr r = klein_irreducibles();
  double worst = 0;
  for (int s = 0; s < 50; ++s) {
    const ComplexVector nu = detail::random_nu(4, rng);
    const Complex formula = detail::klein_alpha_det(nu);
    const GAlphaMatrix m(r->cocycle_ptr(), nu);
    const double scale = 1.0 + std::abs(formula);
    worst = std::max(worst, std::abs(determinant_dense(to_dense(m)) - formula) / scale);
    worst = std::max(worst, std::abs(determinant(m, r) - formula) / scale);
  }
  return {1, "klein-alpha-determinant", worst < 1e-8, "50 samples, max |det - formula|/(1+|formula|) = " + detail::sci(worst)};
}

inline Result klein_trivial_factorization(std::uint64_t seed) {
  Rng rng(seed);
  const IrreducibleSetPtr r = abelian_trivial_irreducibles(make_klein_four());
  double worst = 0;
  for (int s = 0; s < 50; ++s) {
    const ComplexVector nu = detail::random_nu(4, rng);
    const Complex formula = detail::klein_trivial_det(nu);
    const GAlphaMatrix m(r->cocycle_ptr(), nu);
    const double scale = 1.0 + std::abs(formula);
    worst = std::max(worst, std::abs(determinant_dense(to_dense(m)) - formula) / scale);
    worst = std::max(worst, std::abs(determinant(m, r) - formula) / scale);
  }
  return {2, "klein-trivial-factorization", worst < 1e-8, "50 samples, max relative error " + detail::sci(worst)};
}

inline Result d8_block_diagonalization(std::uint64_t seed) {
  Rng rng(seed);
  const IrreducibleSetPtr r = dihedral8_irreducibles();
  const DiagonalizerE e = build_E(r);
  double off = 0, block_err = 0;
  bool ok = true;
  for (int s = 0; s < 50; ++s) {
    const ComplexVector nu = detail::random_nu(8, rng);
    const GAlphaMatrix m(r->cocycle_ptr(), nu);
    const BlockDiagonalization bd = block_diagonalize(m, e);
    off = std::max(off, bd.off_block_residual / bd.scale);
    const ComplexMatrix b1 = transpose(detail::d8_block_rho1(nu)), b2 = transpose(detail::d8_block_rho2(nu));
    const std::vector<const ComplexMatrix*> expected{&b1, &b1, &b2, &b2};
    if (bd.blocks.size() != 4) {
      ok = false;
      break;
    }
    for (std::size_t k = 0; k < 4; ++k) block_err = std::max(block_err, max_abs_diff(bd.blocks[k].matrix, *expected[k]));
  }
  ok = ok && off < 1e-10 && block_err < 1e-10;
  return {3, "d8-block-diagonalization", ok,
          "50 samples, off-block/||M|| = " + detail::sci(off) + ", block error vs reference formulas = " + detail::sci(block_err)};
}

inline Result e_exact_match() {
  using detail::scaled_matrix;
  const ExactMatrixScaled klein_expected = scaled_matrix({"1111", "1-1-", "11--", "1--1"}, Rational::make(1, 4));
  const ExactMatrixScaled d8_expected = scaled_matrix(
      {"10011001", "i001-00j", "-001100-", "j001-00i", "01100110", "0i100-j0", "0-1001-0", "0j100-i0"}, Rational::make(1, 4));

  const DiagonalizerE ek = build_E(abelian_trivial_irreducibles(make_klein_four()));
  const DiagonalizerE ed = build_E(dihedral8_irreducibles());
  const bool klein_ok = ek.exact() && *ek.exact() == klein_expected;
  const bool d8_ok = ed.exact() && *ed.exact() == d8_expected;
  double unit = 0;
  for (const auto& s : builtin_settings()) {
    const ComplexMatrix m = build_E(s.irreducibles).matrix();
    unit = std::max(unit, max_abs_diff(adjoint(m) * m, ComplexMatrix::identity(m.rows())));
  }
  return {4, "E-exact-and-unitary", klein_ok && d8_ok && unit < 1e-12,
          std::string("Z2xZ2 trivial exact match: ") + (klein_ok ? "yes" : "no") + ", D8 exact match: " + (d8_ok ? "yes" : "no") +
              ", max ||E*E - I|| over built-ins = " + detail::sci(unit)};
}

inline Result fourier_inversion_plancherel(std::uint64_t seed) {
  Rng rng(seed);
  double round = 0, planch = 0;
  for (const auto& s : builtin_settings()) {
    const std::size_t n = s.irreducibles->order();
    for (int t = 0; t < 100; ++t) {
      const ComplexVector f = random_vector(n, rng), g = random_vector(n, rng);
      const ComplexVector back = inverse(forward(f, s.irreducibles));
      round = std::max(round, max_abs_diff(back, f) / norm2(f));
      const PlancherelCheck p = check_plancherel(f, g, s.irreducibles);
      const double scale = norm2(f) * norm2(g);
      planch = std::max({planch, p.residual / scale, p.bilinear_residual / scale});
    }
  }
  return {5, "fourier-inversion-plancherel", round < 1e-12 && planch < 1e-11,
          "12 settings x 100 samples, round trip/||f|| = " + detail::sci(round) + ", Plancherel residual/scale = " + detail::sci(planch)};
}

inline Result convolution_theorem(std::uint64_t seed) {
  Rng rng(seed);
  double fourier_err = 0, algebra_err = 0;
  for (const auto& s : builtin_settings()) {
    const IrreducibleSetPtr& r = s.irreducibles;
    const Cocycle& c = r->cocycle();
    const std::size_t n = r->order();
    for (int t = 0; t < 50; ++t) {
      const ComplexVector nu = random_vector(n, rng), mu = random_vector(n, rng);
      const double scale = norm2(nu) * norm2(mu) * static_cast<double>(n);
      const FourierImage lhs = forward(nu, r) * forward(mu, r);
      const FourierImage rhs = forward(alpha_convolve(mu, nu, c), r);
      for (std::size_t i = 0; i < lhs.size(); ++i) fourier_err = std::max(fourier_err, max_abs_diff(lhs[i], rhs[i]) / scale);
      const GAlphaMatrix a(r->cocycle_ptr(), nu), b(r->cocycle_ptr(), mu);
      algebra_err = std::max(algebra_err, max_abs_diff(to_dense(a) * to_dense(b), to_dense(GAlphaMatrix(r->cocycle_ptr(), alpha_convolve(nu, mu, c)))) / scale);
    }
  }
  return {6, "convolution-theorem", fourier_err < 1e-10 && algebra_err < 1e-10,
          "12 settings x 50 pairs, F(nu)F(mu) vs F(mu*nu): " + detail::sci(fourier_err) + ", M(nu)M(mu) vs M(nu*mu): " + detail::sci(algebra_err)};
}

inline Result rank_parity(std::uint64_t seed) {
  Rng rng(seed);
  const IrreducibleSetPtr r = dihedral8_irreducibles();
  const ToleranceConfig& tol = default_tolerances();
  std::size_t odd = 0, mismatch = 0;
  std::map<std::size_t, std::size_t> histogram;
  for (int t = 0; t < 100; ++t) {
    const GAlphaMatrix m(r->cocycle_ptr(), detail::random_low_rank_nu(r, rng));
    const RankCertificate cert = rank(m, r, tol);
    const std::vector<double> sigma = singular_values(to_dense(m), tol);
    const std::size_t dense = sigma.empty() || sigma.front() == 0 ? 0 : rank_above(sigma, tol.rank_cutoff * sigma.front());
    if (cert.rank % 2 != 0) ++odd;
    if (cert.rank != dense) ++mismatch;
    ++histogram[cert.rank];
  }
  std::ostringstream h;
  for (const auto& [k, v] : histogram) h << " " << k << ":" << v;
  return {7, "d8-rank-parity", odd == 0 && mismatch == 0,
          "100 matrices, odd ranks = " + std::to_string(odd) + ", block vs dense rank mismatches = " + std::to_string(mismatch) +
              ", rank histogram" + h.str()};
}

inline Result tight_frame_equivalences(std::uint64_t seed) {
  Rng rng(seed);
  const ToleranceConfig& tol = default_tolerances();
  std::size_t failures = 0, orbit_cases = 0, orbit_tight = 0;
  for (const auto& s : builtin_settings()) {
    const IrreducibleSetPtr& r = s.irreducibles;
    for (int t = 0; t < 20; ++t) {
      const FrameGramian g = detail::nonzero_tight_gramian(r, rng);
      const bool tight = is_tight(g, r, tol).tight;
      const bool dense = detail::dense_is_projection(to_dense(g.matrix), 1e-9);
      FrameGramian scaled{GAlphaMatrix(r->cocycle_ptr(), Complex(1.01) * ComplexVector(g.nu())), "scaled"};
      const bool scaled_tight = is_tight(scaled, r, tol).tight;
      if (!tight || !dense || scaled_tight) ++failures;

      const BlockFormRep b = random_block_form(r, rng, t % 2 == 0);
      const OrbitConditionReport rep = check_orbit_tightness_conditions(b, tol);
      ++orbit_cases;
      if (rep.tight) ++orbit_tight;
      if (rep.tight != rep.gramian_tight) ++failures;
    }
  }
  return {8, "tight-frame-equivalences", failures == 0,
          "12 settings x 20 Gramians (plus 1.01-scaled) and " + std::to_string(orbit_cases) + " block-form orbits (" +
              std::to_string(orbit_tight) + " tight), disagreements = " + std::to_string(failures)};
}

inline Result construction_round_trip(std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0, coord = 0;
  std::size_t errors = 0;
  for (const auto& s : builtin_settings()) {
    const IrreducibleSetPtr& r = s.irreducibles;
    for (int t = 0; t < 20; ++t) {
      try {
        const Construction c = construct_frame(random_tight_gramian(r, rng), r);
        worst = std::max(worst, c.residual / c.scale);
      } catch (const Error&) {
        ++errors;
      }
    }
    // Central Gramian with S = R against the coordinate frame phi_g = (sqrt(d/|G|) xi_kj(g)).
    std::vector<std::size_t> all(r->size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const Construction c = construct_frame(central_gramian(r, all), r);
    const double n = static_cast<double>(r->order());
    for (GroupIndex g = 0; g < r->order(); ++g) {
      const ComplexVector phi = (*c.rep)(g) * c.v;
      ComplexVector expected;
      for (const auto& xi : *r)
        for (std::size_t j = 0; j < xi.dim(); ++j)
          for (std::size_t k = 0; k < xi.dim(); ++k) expected.push_back(std::sqrt(static_cast<double>(xi.dim()) / n) * xi(g)(k, j));
      coord = phi.size() == expected.size() ? std::max(coord, max_abs_diff(phi, expected)) : 1.0;
    }
  }
  return {9, "construction-round-trip", errors == 0 && worst < 1e-8 && coord < 1e-12,
          "12 settings x 20 tight Gramians, max residual/scale = " + detail::sci(worst) + ", failures = " + std::to_string(errors) +
              ", central frame vs coordinate frame = " + detail::sci(coord)};
}

inline Result counting_identities() {
  bool ok = true;
  std::ostringstream d;
  for (const auto& s : builtin_settings()) {
    const IrreducibleSetPtr& r = s.irreducibles;
    const std::size_t classes = count_alpha_regular_classes(r->cocycle());
    const bool sq = r->dimension_sum_of_squares() == r->order();
    bool expected = classes == r->size();
    if (r->cocycle().is_trivial()) expected = expected && classes == conjugacy_classes(r->group()).size();
    if (s.name == "Z2xZ2/klein") expected = expected && classes == 1;
    if (s.name == "D8/alpha") expected = expected && classes == 2;
    if (!sq || !expected) {
      ok = false;
      d << " " << s.name << "(sum d^2=" << r->dimension_sum_of_squares() << ", classes=" << classes << ", |R|=" << r->size() << ")";
    }
  }
  return {10, "counting-identities", ok, ok ? "sum d^2 = |G| and alpha-regular classes = |R| on all 12 settings" : "failed:" + d.str()};
}

inline Result harmonic_frames(std::uint64_t seed) {
  Rng rng(seed);
  bool ok = true;
  std::ostringstream d;
  const std::vector<std::pair<std::string, IrreducibleSetPtr>> settings{
      {"Z4", abelian_trivial_irreducibles(make_cyclic(4))}, {"Z2xZ2", abelian_trivial_irreducibles(make_klein_four())}};
  for (const auto& [name, r] : settings) {
    const std::size_t n = r->order();
    std::vector<ComplexVector> distinct;
    std::size_t tight_count = 0;
    double worst = 0;
    auto check_01 = [&](const FrameGramian& g) {
      const FourierImage img = fourier_coefficients(g, r);
      for (const auto& b : img.blocks()) worst = std::max(worst, std::min(std::abs(b(0, 0)), std::abs(b(0, 0) - 1.0)));
    };
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) subset.push_back(i);
      const FrameGramian g = central_gramian(r, subset);
      if (!is_tight(g, r).tight) continue;
      ++tight_count;
      check_01(g);
      if (classify(g, r).tag != "harmonic") ok = false;
      bool fresh = true;
      for (const auto& v : distinct) fresh = fresh && max_abs_diff(v, g.nu()) > 1e-9;
      if (fresh) distinct.push_back(g.nu());
    }
    for (int t = 0; t < 20; ++t) check_01(random_tight_gramian(r, rng));
    const bool this_ok = tight_count == (std::size_t{1} << n) && distinct.size() == (std::size_t{1} << n) && worst < 1e-10;
    ok = ok && this_ok;
    d << (d.tellp() > 0 ? "; " : "") << name << ": " << distinct.size() << " distinct tight Gramians (expected " << (std::size_t{1} << n)
      << "), max distance of coefficients from {0,1} = " << detail::sci(worst);
  }
  return {11, "harmonic-frames", ok, d.str()};
}

inline std::vector<Result> run_all(std::uint64_t seed = 20240601) {
  std::vector<std::function<Result()>> checks{
      [&] { return klein_determinant(seed + 1); },
      [&] { return klein_trivial_factorization(seed + 2); },
      [&] { return d8_block_diagonalization(seed + 3); },
      [] { return e_exact_match(); },
      [&] { return fourier_inversion_plancherel(seed + 5); },
      [&] { return convolution_theorem(seed + 6); },
      [&] { return rank_parity(seed + 7); },
      [&] { return tight_frame_equivalences(seed + 8); },
      [&] { return construction_round_trip(seed + 9); },
      [] { return counting_identities(); },
      [&] { return harmonic_frames(seed + 11); },
  };
  std::vector<Result> out;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = checks[i]();
    } catch (const std::exception& e) {
      r = {static_cast<int>(i + 1), "criterion-" + std::to_string(i + 1), false, std::string("exception: ") + e.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

inline std::string format(const Result& r) {
  std::ostringstream s;
  s << (r.pass ? "PASS" : "FAIL") << "  [" << (r.id < 10 ? " " : "") << r.id << "] " << r.name << ": " << r.detail << " ("
    << std::fixed;
  s.precision(3);
  s << r.seconds << " s)";
  return s.str();
}

}  // namespace projframe::acceptance
