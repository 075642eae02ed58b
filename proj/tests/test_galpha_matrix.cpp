#include "test_util.hpp"

namespace projframe::testing {
namespace {

ComplexVector random_nu(std::size_t n, Rng& rng) { return random_vector(n, rng); }

TEST(GAlphaMatrix, KleinTrivialReferenceForm) {
  const ComplexVector nu{1.0, 2.0, 3.0, 4.0};  // nu00, nu10, nu01, nu11
  const ComplexMatrix m = to_dense(GAlphaMatrix(trivial_cocycle(make_klein_four()), nu));
  const ComplexMatrix expected{{1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}};
  EXPECT_EQ(m, expected);
}

TEST(GAlphaMatrix, KleinAlphaReferenceForm) {
  const Complex a{1.0, 0.5}, b{2.0, -1.0}, c{3.0, 0.25}, d{-4.0, 2.0};
  const ComplexMatrix m = to_dense(GAlphaMatrix(klein_cocycle(), {a, b, c, d}));
  const ComplexMatrix expected{{a, b, c, d}, {b, a, d, c}, {c, -d, a, -b}, {-d, c, -b, a}};
  EXPECT_EQ(m, expected);
}

TEST(GAlphaMatrix, D8ReferenceForm) {
  Rng rng(2);
  const ComplexVector v = random_nu(8, rng);
  // v indices: 1, a, a^2, a^3, b, ab, a^2b, a^3b
  const Complex i{0.0, 1.0};
  const Complex n1 = v[0], na = v[1], na2 = v[2], na3 = v[3], nb = v[4], nab = v[5], na2b = v[6], na3b = v[7];
  const ComplexMatrix expected{
      {n1, na, na2, na3, nb, nab, na2b, na3b},
      {na3, n1, na, na2, na3b, nb, nab, na2b},
      {na2, na3, n1, na, na2b, na3b, nb, nab},
      {na, na2, na3, n1, nab, na2b, na3b, nb},
      {nb, i * na3b, -na2b, -i * nab, n1, i * na3, -na2, -i * na},
      {-i * nab, nb, i * na3b, -na2b, -i * na, n1, i * na3, -na2},
      {-na2b, -i * nab, nb, i * na3b, -na2, -i * na, n1, i * na3},
      {i * na3b, -na2b, -i * nab, nb, i * na3, -na2, -i * na, n1}};
  EXPECT_LT(max_abs_diff(to_dense(GAlphaMatrix(dihedral_cocycle(4), v)), expected), 1e-15);
}

TEST(GAlphaMatrix, ProductAndAdjointStayInAlgebra) {
  Rng rng(4);
  for (const auto& s : builtin_settings()) {
    const CocyclePtr c = s.irreducibles->cocycle_ptr();
    const std::size_t n = c->order();
    const GAlphaMatrix x(c, random_nu(n, rng)), y(c, random_nu(n, rng));
    EXPECT_LT(max_abs_diff(to_dense(x * y), to_dense(x) * to_dense(y)), 1e-12) << s.name;
    EXPECT_LT(max_abs_diff(to_dense(adjoint(x)), adjoint(to_dense(x))), 1e-14) << s.name;
    const GAlphaMatrix e(c, identity_vector(*c));
    EXPECT_LT(max_abs_diff(to_dense(e), ComplexMatrix::identity(n)), 1e-15) << s.name;
  }
}

TEST(GAlphaMatrix, RecognizeRoundTripAndRejection) {
  Rng rng(5);
  const CocyclePtr c = dihedral_cocycle(4);
  const GAlphaMatrix x(c, random_nu(8, rng));
  const GAlphaMatrix back = recognize(to_dense(x), c);
  EXPECT_LT(max_abs_diff(back.nu(), x.nu()), 1e-15);
  ComplexMatrix bad = to_dense(x);
  bad(3, 5) += 0.1;
  try {
    recognize(bad, c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_galpha_matrix);
    EXPECT_EQ(e.witness(), (std::vector<std::size_t>{3, 5}));
  }
  EXPECT_THROW(recognize(ComplexMatrix(3, 3), c), Error);
}

TEST(GAlphaMatrix, DeltaMatricesAreUnitary) {
  Rng rng(6);
  const CocyclePtr c = klein_cocycle();
  for (GroupIndex g = 0; g < 4; ++g) {
    ComplexVector delta(4);
    delta[g] = 1.0;
    const ComplexMatrix d = to_dense(GAlphaMatrix(c, delta));
    EXPECT_LT(max_abs_diff(adjoint(d) * d, ComplexMatrix::identity(4)), 1e-15);
  }
}

TEST(GAlphaMatrix, PseudoinverseInAlgebra) {
  Rng rng(7);
  const auto r = dihedral8_irreducibles();
  const CocyclePtr c = r->cocycle_ptr();
  // Rank-deficient: kill the rho2 Fourier block.
  FourierImage img = forward(random_nu(8, rng), r);
  img[1] = ComplexMatrix(2, 2);
  const GAlphaMatrix x(c, inverse(img));
  const GAlphaMatrix p = pseudoinverse(x);
  const ComplexMatrix a = to_dense(x), pd = to_dense(p);
  EXPECT_LT(max_abs_diff(a * pd * a, a), 1e-10);
  EXPECT_LT(max_abs_diff(pd * a * pd, pd), 1e-10);
  EXPECT_LT(max_abs_diff(pd, from_eigen(to_eigen(a).completeOrthogonalDecomposition().pseudoInverse())), 1e-9);
}

TEST(GAlphaMatrix, TransposeAndBracketVariants) {
  Rng rng(8);
  for (const auto& s : builtin_settings()) {
    const CocyclePtr c = s.irreducibles->cocycle_ptr();
    const ComplexVector nu = random_nu(c->order(), rng);
    const GAlphaMatrix m(c, nu);
    const CocyclePtr ci = invert(*c);
    EXPECT_LT(max_abs_diff(transpose(to_dense(m)), to_dense(GAlphaMatrix(ci, transpose_vector(nu, *c)))), 1e-13) << s.name;
    const GAlphaMatrix b = to_bracket_variant(m);
    EXPECT_LT(max_abs_diff(transpose(to_dense(b)), to_dense(GAlphaMatrix(c, bracket_transpose_vector(nu, *c)))), 1e-13)
        << s.name;
    // [G,alpha] entries alpha(g, g^{-1}h) nu(g^{-1}h)
    const FiniteGroup& g = c->group();
    const ComplexMatrix bd = to_dense(b);
    for (GroupIndex x = 0; x < g.order(); ++x)
      for (GroupIndex y = 0; y < g.order(); ++y) {
        const GroupIndex z = g.mul(g.inv(x), y);
        EXPECT_LT(std::abs(bd(x, y) - (*c)(x, z) * nu[z]), 1e-14);
      }
  }
}

TEST(GAlphaMatrix, JConjugateEntries) {
  Rng rng(9);
  const CocyclePtr c = dihedral_cocycle(4);
  const ComplexVector nu = random_nu(8, rng);
  const ComplexMatrix j = j_conjugate(GAlphaMatrix(c, nu));
  const FiniteGroup& g = c->group();
  for (GroupIndex x = 0; x < 8; ++x)
    for (GroupIndex y = 0; y < 8; ++y) {
      const GroupIndex z = g.mul(x, g.inv(y));
      EXPECT_LT(std::abs(j(x, y) - nu[z] / (*c)(g.inv(x), z)), 1e-14);
    }
}

TEST(GAlphaMatrix, ProductOfDifferentCocyclesRejected) {
  const GAlphaMatrix a(klein_cocycle(), ComplexVector(4)), b(trivial_cocycle(make_klein_four()), ComplexVector(4));
  EXPECT_THROW(a * b, Error);
  EXPECT_THROW(GAlphaMatrix(klein_cocycle(), ComplexVector(3)), Error);
}

}  // namespace
}  // namespace projframe::testing
