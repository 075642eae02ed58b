#include "test_util.hpp"

namespace projframe::testing {
namespace {

bool dense_projection(const ComplexMatrix& m, double tol = 1e-9) {
  const EigenMatrix e = to_eigen(m);
  return (e * e - e).norm() < tol && (e.adjoint() - e).norm() < tol;
}

TEST(Frames, GramianEqualsDenseInnerProducts) {
  Rng rng(41);
  for (const auto& s : builtin_settings()) {
    const auto& r = s.irreducibles;
    const BlockFormRep b = random_block_form(r, rng, false);
    const ProjectiveRep rep = b.rep();
    const ComplexVector v = b.vector();
    const auto phi = orbit(rep, v);
    const ComplexMatrix g = to_dense(gramian_of_orbit(rep, v).matrix);
    for (GroupIndex x = 0; x < r->order(); ++x)
      for (GroupIndex y = 0; y < r->order(); ++y) EXPECT_LT(std::abs(g(x, y) - inner(phi[y], phi[x])), 1e-12) << s.name;
  }
}

TEST(Frames, KleinExampleOrbit) {
  const auto r = klein_irreducibles();
  const ComplexVector v{std::sqrt(0.5), 0.0};
  const FrameGramian g = gramian_of_orbit(klein_rep(), v);
  EXPECT_LT(max_abs_diff(g.nu(), ComplexVector{0.5, 0.0, 0.5, 0.0}), 1e-15);
  EXPECT_TRUE(is_tight(g, r).tight);
  EXPECT_TRUE(dense_projection(to_dense(g.matrix)));
  const FrameClass c = classify(g, r);
  EXPECT_TRUE(c.irreducible);
  EXPECT_EQ(c.tag, "irreducible");
}

TEST(Frames, TightnessAgreesWithDenseProjection) {
  Rng rng(42);
  for (const auto& s : builtin_settings()) {
    const auto& r = s.irreducibles;
    const FrameGramian tight = random_tight_gramian(r, rng);
    EXPECT_TRUE(is_tight(tight, r).tight) << s.name;
    EXPECT_TRUE(dense_projection(to_dense(tight.matrix))) << s.name;
    const FrameGramian psd = random_psd_gramian(r, rng);
    EXPECT_FALSE(is_tight(psd, r).tight) << s.name;
    EXPECT_FALSE(dense_projection(to_dense(psd.matrix))) << s.name;
  }
}

TEST(Frames, OrbitConditionsAgreeWithGramian) {
  Rng rng(43);
  for (const auto& s : builtin_settings())
    for (int t = 0; t < 5; ++t) {
      const BlockFormRep tb = random_block_form(s.irreducibles, rng, true);
      const OrbitConditionReport tr = check_orbit_tightness_conditions(tb);
      EXPECT_TRUE(tr.tight) << s.name;
      EXPECT_EQ(tr.tight, tr.gramian_tight) << s.name;
      const BlockFormRep gb = random_block_form(s.irreducibles, rng, false);
      const OrbitConditionReport gr = check_orbit_tightness_conditions(gb);
      EXPECT_EQ(gr.tight, gr.gramian_tight) << s.name;
    }
}

TEST(Frames, RepeatedSummandWithParallelComponentsIsNotTight) {
  const auto r = dihedral8_irreducibles();
  const double f = 0.5;  // sqrt(2/8)
  const BlockFormRep b{r, {0, 0}, {ComplexVector{f, 0.0}, ComplexVector{f, 0.0}}};
  const OrbitConditionReport rep = check_orbit_tightness_conditions(b);
  EXPECT_TRUE(rep.norms_ok);
  EXPECT_FALSE(rep.orthogonality_ok);
  EXPECT_FALSE(rep.tight);
  EXPECT_FALSE(rep.gramian_tight);
  ASSERT_EQ(rep.non_orthogonal.size(), 1u);
}

TEST(Frames, ConstructionRoundTrip) {
  Rng rng(44);
  for (const auto& s : builtin_settings()) {
    const auto& r = s.irreducibles;
    const FrameGramian g = random_tight_gramian(r, rng);
    const Construction c = construct_frame(g, r);
    EXPECT_LT(c.residual, 1e-10) << s.name;
    EXPECT_EQ(c.v.size(), numerical_rank(to_dense(g.matrix))) << s.name;
    if (c.rep) {
      EXPECT_LT(max_abs_diff(to_dense(gramian_of_orbit(*c.rep, c.v).matrix), to_dense(g.matrix)), 1e-10) << s.name;
    }
  }
}

TEST(Frames, ConstructionRejectsNonTight) {
  Rng rng(45);
  const auto r = dihedral8_irreducibles();
  try {
    construct_frame(random_psd_gramian(r, rng), r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::precondition_violation);
  }
}

TEST(Frames, PsdConstruction) {
  Rng rng(46);
  for (const auto& s : builtin_settings()) {
    const auto& r = s.irreducibles;
    const FrameGramian g = random_psd_gramian(r, rng);
    const Construction c = construct_from_psd(g, r);
    EXPECT_LT(c.residual, 1e-8 * c.scale) << s.name;
  }
}

TEST(Frames, PsdConstructionRejectsIndefinite) {
  const auto r = dihedral8_irreducibles();
  const FourierImage img(r, {ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}, ComplexMatrix::identity(2)});
  const FrameGramian g{GAlphaMatrix(r->cocycle_ptr(), inverse(img)), "indefinite"};
  try {
    construct_from_psd(g, r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_a_gramian);
  }
}

TEST(Frames, CentralGramians) {
  const auto r = dihedral8_irreducibles();
  const FrameGramian one = central_gramian(r, {0});
  const ComplexVector expected{0.5, Complex(0.25, 0.25), 0.0, Complex(0.25, -0.25), 0.0, 0.0, 0.0, 0.0};
  EXPECT_LT(max_abs_diff(one.nu(), expected), 1e-15);
  EXPECT_TRUE(is_tight(one, r).tight);
  EXPECT_EQ(classify(one, r).tag, "central");
  const FrameGramian both = central_gramian(r, {0, 1});
  EXPECT_LT(max_abs_diff(to_dense(both.matrix), ComplexMatrix::identity(8)), 1e-15);
  EXPECT_THROW(central_gramian(r, {2}), Error);
}

TEST(Frames, HarmonicFrames) {
  for (std::size_t n : {3u, 5u, 6u}) {
    const auto r = abelian_trivial_irreducibles(make_cyclic(n));
    const FrameGramian g = central_gramian(r, {0, 2});
    const FrameClass c = classify(g, r);
    EXPECT_TRUE(c.harmonic);
    EXPECT_TRUE(c.tight);
    EXPECT_EQ(c.tag, "harmonic");
    // Gramian of the harmonic frame (chi_0(g), chi_2(g)) / sqrt(n)
    const ComplexMatrix dense = to_dense(g.matrix);
    for (GroupIndex x = 0; x < n; ++x)
      for (GroupIndex y = 0; y < n; ++y) {
        const Complex expected = (1.0 + std::polar(1.0, 2.0 * std::numbers::pi * 2.0 * (double(y) - double(x)) / double(n))) / double(n);
        EXPECT_LT(std::abs(dense(x, y) - expected), 1e-14);
      }
  }
}

TEST(Frames, ClassificationFlags) {
  Rng rng(47);
  const auto r = dihedral8_irreducibles();
  const FourierImage img(r, {random_projection(2, 1, rng), ComplexMatrix(2, 2)});
  const FrameGramian g{GAlphaMatrix(r->cocycle_ptr(), inverse(img)), "x"};
  const FrameClass c = classify(g, r);
  EXPECT_TRUE(c.homogeneous);
  EXPECT_TRUE(c.irreducible);
  EXPECT_FALSE(c.central);
  const FourierImage img2(r, {random_projection(2, 1, rng), random_projection(2, 1, rng)});
  const FrameClass c2 = classify(FrameGramian{GAlphaMatrix(r->cocycle_ptr(), inverse(img2)), "y"}, r);
  EXPECT_EQ(c2.tag, "general");
  EXPECT_TRUE(c2.tight);
}

TEST(Frames, NonUnitaryRepRefused) {
  std::vector<ComplexMatrix> mats(2, ComplexMatrix{{2.0}});
  const ProjectiveRep r(trivial_cocycle(make_cyclic(2)), mats);
  EXPECT_THROW(gramian_of_orbit(r, ComplexVector{1.0}), Error);
}

}  // namespace
}  // namespace projframe::testing
