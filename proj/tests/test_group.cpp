#include "test_util.hpp"

namespace projframe::testing {
namespace {

TEST(Group, CyclicTable) {
  const GroupPtr g = make_cyclic(5);
  EXPECT_EQ(g->order(), 5u);
  EXPECT_EQ(g->mul(3, 4), 2u);
  EXPECT_EQ(g->inv(2), 3u);
  EXPECT_TRUE(g->is_abelian());
  EXPECT_EQ(g->element_order(1), 5u);
}

TEST(Group, KleinOrderingAndNames) {
  const GroupPtr g = make_klein_four();
  ASSERT_EQ(g->order(), 4u);
  // 1, a, b, ab = (0,0), (1,0), (0,1), (1,1)
  EXPECT_EQ(g->mul(1, 2), 3u);
  EXPECT_EQ(g->mul(3, 1), 2u);
  for (GroupIndex x = 0; x < 4; ++x) EXPECT_EQ(g->mul(x, x), 0u);
  EXPECT_EQ(g->element_name(3), "ab");
  EXPECT_EQ(g->find("b"), std::optional<GroupIndex>(2));
}

TEST(Group, DihedralRelations) {
  for (std::size_t m : {3u, 4u, 5u, 6u}) {
    const GroupPtr g = make_dihedral(m);
    ASSERT_EQ(g->order(), 2 * m);
    const GroupIndex a = 1, b = m;
    EXPECT_EQ(g->power(a, m), 0u);
    EXPECT_EQ(g->mul(b, b), 0u);
    EXPECT_EQ(g->mul(g->mul(b, a), b), g->inv(a));
    EXPECT_FALSE(g->is_abelian());
  }
  const GroupPtr d8 = make_dihedral(4);
  EXPECT_EQ(d8->element_name(5), "ab");
  EXPECT_EQ(d8->element_name(7), "a^3b");
}

TEST(Group, ConjugacyClassCounts) {
  EXPECT_EQ(conjugacy_classes(*make_cyclic(6)).size(), 6u);
  EXPECT_EQ(conjugacy_classes(*make_dihedral(4)).size(), 5u);
  EXPECT_EQ(conjugacy_classes(*make_dihedral(3)).size(), 3u);
  EXPECT_EQ(conjugacy_classes(*make_dihedral(5)).size(), 4u);
}

TEST(Group, RejectsBadTables) {
  auto expect_kind = [](auto&& fn, ErrorKind k) {
    try {
      fn();
      ADD_FAILURE() << "expected an error";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), k) << e.what();
    }
  };
  expect_kind([] { FiniteGroup::from_table("x", {}); }, ErrorKind::invalid_order);
  expect_kind([] { FiniteGroup::from_table("x", {{0, 1}, {1, 1}}); }, ErrorKind::invalid_group);
  expect_kind([] { FiniteGroup::from_table("x", {{1, 0}, {0, 1}}); }, ErrorKind::invalid_group);
  expect_kind([] { FiniteGroup::from_table("x", {{0, 1}, {1, 2}}); }, ErrorKind::invalid_group);
  // Latin square with identity 0 that is not associative (order 5).
  expect_kind(
      [] {
        FiniteGroup::from_table("x", {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}});
      },
      ErrorKind::invalid_group);
  expect_kind([] { make_cyclic(0); }, ErrorKind::invalid_order);
}

TEST(Group, DirectProductIndexing) {
  const GroupPtr z2 = make_cyclic(2), z3 = make_cyclic(3);
  const GroupPtr p = make_direct_product(*z2, *z3);
  ASSERT_EQ(p->order(), 6u);
  // (1,0) * (0,1) = (1,1) -> 1 + 2*1
  EXPECT_EQ(p->mul(1, 2), 3u);
  EXPECT_TRUE(p->is_abelian());
}

}  // namespace
}  // namespace projframe::testing
