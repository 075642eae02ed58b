#include "test_util.hpp"

namespace projframe::testing {
namespace {

TEST(Cocycle, KleinTableMatchesReferenceSigns) {
  const CocyclePtr c = klein_cocycle();
  const int expected[4][4] = {{1, 1, 1, 1}, {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, 1, -1}};
  for (GroupIndex g = 0; g < 4; ++g)
    for (GroupIndex h = 0; h < 4; ++h) EXPECT_EQ((*c)(g, h), Complex(expected[g][h])) << g << "," << h;
  EXPECT_TRUE(validate_cocycle(*c).ok);
  EXPECT_TRUE(c->is_exact());
  EXPECT_FALSE(c->is_trivial());
}

TEST(Cocycle, DihedralCocyclesValidate) {
  for (std::size_t m : {2u, 4u, 6u, 8u}) {
    const CocyclePtr c = dihedral_cocycle(m);
    EXPECT_TRUE(validate_cocycle(*c).ok) << m;
  }
  EXPECT_THROW(dihedral_cocycle(3), Error);
}

TEST(Cocycle, IPowerFormulaFailsWhenMIsTwoModFour) {
  const std::size_t m = 6, n = 12;
  const GroupPtr g = make_dihedral(m);
  std::vector<UnitComplex> t;
  for (GroupIndex x = 0; x < n; ++x)
    for (GroupIndex y = 0; y < n; ++y) t.emplace_back(RootOfUnity::i_pow(static_cast<std::int64_t>((x / m) * (y % m))));
  EXPECT_FALSE(validate_cocycle(Cocycle(g, t)).ok);
}

TEST(Cocycle, D8Entries) {
  const CocyclePtr c = dihedral_cocycle(4);
  // alpha(a^j b^k, a^l b^p) = i^{kl}
  EXPECT_EQ((*c)(4, 1), Complex(0.0, 1.0));  // (b, a)
  EXPECT_EQ((*c)(5, 3), Complex(0.0, -1.0)); // (ab, a^3)
  EXPECT_EQ((*c)(1, 4), Complex(1.0, 0.0));  // (a, b)
}

TEST(Cocycle, InvalidTableHasWitness) {
  const GroupPtr g = make_cyclic(2);
  const CocyclePtr c = make_cocycle(g, {UnitComplex(RootOfUnity::i_pow(1)), UnitComplex(), UnitComplex(), UnitComplex()});
  const ValidationReport rep = validate_cocycle(*c);
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(rep.witness.size(), 3u);
  EXPECT_GT(rep.max_deviation, 0.5);
}

TEST(Cocycle, ShapeChecked) {
  EXPECT_THROW(Cocycle(make_cyclic(2), std::vector<UnitComplex>(3)), Error);
}

TEST(Cocycle, AlgebraOfCocycles) {
  const CocyclePtr c = dihedral_cocycle(4);
  const CocyclePtr prod = multiply(*c, *invert(*c));
  EXPECT_TRUE(prod->is_trivial());
  EXPECT_TRUE(validate_cocycle(*tilde(*c)).ok);
  EXPECT_TRUE(validate_cocycle(*normalize(*c)).ok);
  Rng rng(1);
  std::vector<UnitComplex> cmap;
  std::uniform_real_distribution<double> angle(0, 6.283);
  for (int i = 0; i < 8; ++i) cmap.emplace_back(std::polar(1.0, angle(rng)));
  const CocyclePtr b = coboundary(c->group_ptr(), cmap);
  EXPECT_TRUE(validate_cocycle(*b).ok);
  EXPECT_TRUE(validate_cocycle(*multiply(*c, *b)).ok);
}

TEST(Cocycle, AlphaRegularClassCounts) {
  EXPECT_EQ(count_alpha_regular_classes(*klein_cocycle()), 1u);
  EXPECT_EQ(count_alpha_regular_classes(*dihedral_cocycle(4)), 2u);
  EXPECT_EQ(count_alpha_regular_classes(*trivial_cocycle(make_dihedral(4))), 5u);
  EXPECT_EQ(count_alpha_regular_classes(*trivial_cocycle(make_cyclic(7))), 7u);
}

TEST(Cocycle, RejectsZeroEntry) { EXPECT_THROW(UnitComplex(Complex(0.0, 0.0)), Error); }

}  // namespace
}  // namespace projframe::testing
