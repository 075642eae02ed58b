#pragma once

// Seeded random inputs for property tests and the acceptance suite.

#include <random>
#include <vector>

#include "projframe/fourier.hpp"
#include "projframe/frames.hpp"
#include "projframe/numerics.hpp"
#include "projframe/repn.hpp"

namespace projframe {

using Rng = std::mt19937_64;

/// Entries with independent standard normal real and imaginary parts.
inline ComplexVector random_vector(std::size_t n, Rng& rng) {
  std::normal_distribution<double> dist;
  ComplexVector v(n);
  for (auto& z : v) z = {dist(rng), dist(rng)};
  return v;
}

inline ComplexMatrix random_matrix(std::size_t r, std::size_t c, Rng& rng) {
  ComplexMatrix m(r, c);
  std::normal_distribution<double> dist;
  for (auto& z : m.data()) z = {dist(rng), dist(rng)};
  return m;
}

/// Haar-distributed-ish unitary from Gram-Schmidt on a Gaussian matrix.
inline ComplexMatrix random_unitary(std::size_t d, Rng& rng) {
  ComplexMatrix q = random_matrix(d, d, rng);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex p{};
      for (std::size_t i = 0; i < d; ++i) p += std::conj(q(i, k)) * q(i, j);
      for (std::size_t i = 0; i < d; ++i) q(i, j) -= p * q(i, k);
    }
    double nrm = 0;
    for (std::size_t i = 0; i < d; ++i) nrm += std::norm(q(i, j));
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < d; ++i) q(i, j) /= nrm;
  }
  return q;
}

/// Orthogonal projection of rank m onto the span of m random orthonormal vectors.
inline ComplexMatrix random_projection(std::size_t d, std::size_t m, Rng& rng) {
  const ComplexMatrix u = random_unitary(d, rng);
  ComplexMatrix p(d, d);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) p(i, j) += u(i, k) * std::conj(u(j, k));
  return p;
}

/// A tight Gramian whose Fourier blocks are random projections of random rank.
inline FrameGramian random_tight_gramian(const IrreducibleSetPtr& r, Rng& rng) {
  std::vector<ComplexMatrix> blocks;
  for (const auto& rho : *r) {
    std::uniform_int_distribution<std::size_t> rank_dist(0, rho.dim());
    blocks.push_back(random_projection(rho.dim(), rank_dist(rng), rng));
  }
  return {GAlphaMatrix(r->cocycle_ptr(), inverse(FourierImage(r, std::move(blocks)))), "random tight"};
}

/// A Gramian whose Fourier blocks are random PSD matrices X X*.
inline FrameGramian random_psd_gramian(const IrreducibleSetPtr& r, Rng& rng) {
  std::vector<ComplexMatrix> blocks;
  for (const auto& rho : *r) {
    const ComplexMatrix x = random_matrix(rho.dim(), rho.dim(), rng);
    blocks.push_back(x * adjoint(x));
  }
  return {GAlphaMatrix(r->cocycle_ptr(), inverse(FourierImage(r, std::move(blocks)))), "random psd"};
}

/// Block-form representation: 1..max_summands random members of R. When
/// `tight` is set, components of equal summands are orthonormal up to the
/// factor sqrt(d/|G|) (and at most d copies of each member are drawn).
inline BlockFormRep random_block_form(const IrreducibleSetPtr& r, Rng& rng, bool tight, std::size_t max_summands = 4) {
  BlockFormRep b{r, {}, {}};
  std::uniform_int_distribution<std::size_t> count_dist(1, max_summands), member_dist(0, r->size() - 1);
  const std::size_t count = count_dist(rng);
  std::vector<std::size_t> used(r->size());
  std::vector<ComplexMatrix> bases;
  for (std::size_t i = 0; i < r->size(); ++i) bases.push_back(random_unitary((*r)[i].dim(), rng));
  const double n = static_cast<double>(r->order());
  for (std::size_t s = 0; s < count; ++s) {
    const std::size_t idx = member_dist(rng);
    const std::size_t d = (*r)[idx].dim();
    if (tight && used[idx] == d) continue;
    ComplexVector v = tight ? bases[idx].column(used[idx]) : random_vector(d, rng);
    if (tight)
      for (auto& z : v) z *= std::sqrt(static_cast<double>(d) / n);
    ++used[idx];
    b.summands.push_back(idx);
    b.components.push_back(std::move(v));
  }
  return b;
}

}  // namespace projframe
