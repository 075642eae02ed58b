#include "test_util.hpp"

namespace projframe::testing {
namespace {

ComplexMatrix scaled(std::initializer_list<std::initializer_list<Complex>> rows, double s) { return s * ComplexMatrix(rows); }

TEST(BlockDiag, KleinERhoMatchesReference) {
  const double s = 1.0 / std::sqrt(2.0);
  const auto r = klein_irreducibles();
  const DiagonalizerE e = build_E(r);
  EXPECT_LT(max_abs_diff(e.matrix(), scaled({{1, 0, 0, 1}, {0, 1, 1, 0}, {1, 0, 0, -1}, {0, -1, 1, 0}}, s)), 1e-15);
  ASSERT_TRUE(e.exact().has_value());
  for (const Rational& q : e.exact()->column_scale_sq) EXPECT_EQ(q, Rational::make(1, 2));
}

TEST(BlockDiag, KleinERhoTildeMatchesReference) {
  const double s = 1.0 / std::sqrt(2.0);
  const CocyclePtr c = klein_cocycle();
  const auto r = make_irreducible_set(c, {klein_rep_tilde(c)});
  EXPECT_LT(max_abs_diff(build_E(r).matrix(), scaled({{1, 0, 0, 1}, {1, 0, 0, -1}, {0, 1, 1, 0}, {0, 1, -1, 0}}, s)), 1e-15);
}

TEST(BlockDiag, KleinBlocksAreTransposedFourierBlocks) {
  Rng rng(31);
  const ComplexVector v = random_vector(4, rng);
  const Complex n00 = v[0], n10 = v[1], n01 = v[2], n11 = v[3];
  const CocyclePtr c = klein_cocycle();
  const GAlphaMatrix m(c, v);
  const BlockDiagonalization bd = block_diagonalize(m, build_E(klein_irreducibles()));
  const ComplexMatrix c_rho{{n00 + n01, n10 - n11}, {n10 + n11, n00 - n01}};
  ASSERT_EQ(bd.blocks.size(), 2u);
  for (const auto& b : bd.blocks) EXPECT_LT(max_abs_diff(b.matrix, c_rho), 1e-14);
  const auto rt = make_irreducible_set(c, {klein_rep_tilde(c)});
  const ComplexMatrix c_tilde{{n00 + n10, n01 + n11}, {n01 - n11, n00 - n10}};
  for (const auto& b : block_diagonalize(m, build_E(rt)).blocks) EXPECT_LT(max_abs_diff(b.matrix, c_tilde), 1e-14);
}

TEST(BlockDiag, EIsUnitary) {
  for (const auto& s : builtin_settings()) {
    const ComplexMatrix e = build_E(s.irreducibles).matrix();
    EXPECT_LT(max_abs_diff(adjoint(e) * e, ComplexMatrix::identity(e.rows())), 1e-13) << s.name;
  }
}

TEST(BlockDiag, BlocksEqualTransposedFourierEverywhere) {
  Rng rng(32);
  for (const auto& s : builtin_settings()) {
    const auto& r = s.irreducibles;
    const GAlphaMatrix m(r->cocycle_ptr(), random_vector(r->order(), rng));
    const FourierImage img = forward(m.nu(), r);
    const BlockDiagonalization bd = block_diagonalize(m, build_E(r));
    EXPECT_LT(bd.off_block_residual, 1e-12 * bd.scale) << s.name;
    for (const auto& b : bd.blocks) EXPECT_LT(max_abs_diff(b.matrix, transpose(img[b.rho])), 1e-12) << s.name;
  }
}

TEST(BlockDiag, D8UnconjugatedFormIsAlsoBlockDiagonal) {
  Rng rng(33);
  const auto r = dihedral8_irreducibles();
  const ComplexVector v = random_vector(8, rng);
  const Complex i{0.0, 1.0};
  const Complex n1 = v[0], na = v[1], na2 = v[2], na3 = v[3], nb = v[4], nab = v[5], na2b = v[6], na3b = v[7];
  const ComplexMatrix e = build_E(r).matrix();
  const ComplexMatrix conj_m = adjoint(e) * to_dense(GAlphaMatrix(r->cocycle_ptr(), v)) * e;
  const ComplexMatrix first{{n1 + i * na - na2 - i * na3, nb + i * nab - na2b - i * na3b},
                            {nb - nab + na2b - na3b, n1 - na + na2 - na3}};
  EXPECT_LT(max_abs_diff(conj_m.block(0, 0, 2, 2), first), 1e-13);
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y)
      if (x / 2 != y / 2) {
        EXPECT_LT(std::abs(conj_m(x, y)), 1e-13) << x << "," << y;
      }
}

TEST(BlockDiag, OrdinaryVariantForTrivialCocycle) {
  Rng rng(34);
  for (const auto& s : builtin_settings()) {
    const auto& r = s.irreducibles;
    if (!r->cocycle().is_trivial()) {
      EXPECT_THROW(ordinary_block_diagonalize(GAlphaMatrix(r->cocycle_ptr(), ComplexVector(r->order())), build_E(r)), Error);
      continue;
    }
    const GAlphaMatrix m(r->cocycle_ptr(), random_vector(r->order(), rng));
    const FourierImage var = forward_variant(m.nu(), r);
    const BlockDiagonalization bd = ordinary_block_diagonalize(m, build_E(r));
    for (const auto& b : bd.blocks) EXPECT_LT(max_abs_diff(b.matrix, var[b.rho]), 1e-12) << s.name;
  }
}

TEST(BlockDiag, DeterminantMatchesDenseLu) {
  Rng rng(35);
  for (const auto& s : builtin_settings()) {
    const auto& r = s.irreducibles;
    const GAlphaMatrix m(r->cocycle_ptr(), random_vector(r->order(), rng));
    const Complex oracle = to_eigen(to_dense(m)).partialPivLu().determinant();
    EXPECT_LT(std::abs(determinant(m, r) - oracle), 1e-9 * std::max(1.0, std::abs(oracle))) << s.name;
  }
}

TEST(BlockDiag, KleinDeterminantFormulas) {
  Rng rng(36);
  const ComplexVector v = random_vector(4, rng);
  const Complex n00 = v[0], n10 = v[1], n01 = v[2], n11 = v[3];
  const Complex alpha_det = std::pow(n00 * n00 + n11 * n11 - n10 * n10 - n01 * n01, 2);
  EXPECT_LT(std::abs(determinant(GAlphaMatrix(klein_cocycle(), v), klein_irreducibles()) - alpha_det), 1e-12);
  const Complex triv_det = (n00 + n10 + n01 + n11) * (n00 - n10 + n01 - n11) * (n00 + n10 - n01 - n11) * (n00 - n10 - n01 + n11);
  const auto rt = abelian_trivial_irreducibles(make_klein_four());
  EXPECT_LT(std::abs(determinant(GAlphaMatrix(rt->cocycle_ptr(), v), rt) - triv_det), 1e-12);
}

TEST(BlockDiag, RankMatchesEigen) {
  Rng rng(37);
  for (const auto& s : builtin_settings()) {
    const auto& r = s.irreducibles;
    for (int t = 0; t < 4; ++t) {
      std::vector<ComplexMatrix> blocks;
      for (const auto& rho : *r) {
        std::uniform_int_distribution<std::size_t> k_dist(0, rho.dim());
        const std::size_t k = k_dist(rng);
        blocks.push_back(k == 0 ? ComplexMatrix(rho.dim(), rho.dim())
                                : random_matrix(rho.dim(), k, rng) * random_matrix(k, rho.dim(), rng));
      }
      const GAlphaMatrix m(r->cocycle_ptr(), inverse(FourierImage(r, blocks)));
      const RankCertificate cert = rank(m, r);
      EXPECT_EQ(cert.rank, eigen_rank(to_dense(m))) << s.name;
      std::size_t sum = 0;
      for (const auto& b : cert.blocks) sum += b.dim * b.rank;
      EXPECT_EQ(sum, cert.rank);
    }
  }
}

TEST(BlockDiag, KleinAlphaRanksAreEven) {
  Rng rng(38);
  const auto r = klein_irreducibles();
  for (int t = 0; t < 20; ++t) {
    const GAlphaMatrix m(r->cocycle_ptr(), random_vector(4, rng));
    EXPECT_EQ(rank(m, r).rank % 2, 0u);
  }
}

TEST(BlockDiag, ZeroMatrixHasRankZero) {
  const auto r = dihedral8_irreducibles();
  EXPECT_EQ(rank(GAlphaMatrix(r->cocycle_ptr(), ComplexVector(8)), r).rank, 0u);
}

TEST(BlockDiag, IncompleteSetRejected) {
  const auto full = dihedral8_irreducibles();
  const auto partial = make_irreducible_set(full->cocycle_ptr(), {(*full)[0]});
  try {
    build_E(partial);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::incomplete_set);
  }
}

TEST(BlockDiag, WrongBasisFailsWithResidual) {
  // A non-complete set padded to the right size by repetition is not a valid E.
  const auto full = dihedral8_irreducibles();
  const auto dup = make_irreducible_set(full->cocycle_ptr(), {(*full)[0], (*full)[0].relabeled("again")});
  Rng rng(39);
  const GAlphaMatrix m(full->cocycle_ptr(), random_vector(8, rng));
  try {
    block_diagonalize(m, build_E(dup));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::diagonalization_failure);
  }
}

TEST(BlockDiag, RationalReduces) {
  EXPECT_EQ(Rational::make(2, 8), (Rational{1, 4}));
  EXPECT_EQ(Rational::make(3, -6), (Rational{-1, 2}));
  EXPECT_THROW(Rational::make(1, 0), Error);
}

}  // namespace
}  // namespace projframe::testing
