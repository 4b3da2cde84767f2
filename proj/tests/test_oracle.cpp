#include <gtest/gtest.h>

#include <map>

#include "pchar/error.hpp"
#include "pchar/oracle.hpp"
#include "test_util.hpp"

using namespace pchar;
using namespace pchar::testing;

TEST(Oracle, FamilyAThree) {
  const auto fa = family_a(3);
  const auto t = irr_exhaustive(fa.whole);
  EXPECT_EQ(t.irreducibles.size(), 17u);
  EXPECT_EQ(t.class_count, 17u);
  std::map<std::uint64_t, std::size_t> by_degree;
  for (auto d : t.degrees) ++by_degree[d];
  EXPECT_EQ(by_degree, (std::map<std::uint64_t, std::size_t>{{1, 9}, {3, 8}}));
  EXPECT_EQ(t.degree_square_sum(), 81u);
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i)
    for (std::size_t j = 0; j < t.irreducibles.size(); ++j)
      EXPECT_EQ(mackey_inner_product(t.irreducibles[i], t.irreducibles[j]), i == j ? 1u : 0u);
}

TEST(Oracle, Abelian) {
  const auto e = PcGroup::create(PcPresentation::elementary_abelian(3, 2, {}));
  EXPECT_EQ(irr_exhaustive(Subgroup::full(e)).irreducibles.size(), 9u);
  const auto t = irr_exhaustive(Subgroup::full(cyclic(3, 2)));
  EXPECT_EQ(t.irreducibles.size(), 9u);
  std::uint64_t top = 0;
  for (const auto& d : t.irreducibles) top = std::max(top, d.character.value_order());
  EXPECT_EQ(top, 9u);
}

TEST(Oracle, Decompose) {
  const auto fa = family_a(3);
  const auto t = irr_exhaustive(fa.whole);
  const auto parts = decompose_against_irr({fa.whole, fa.lambda}, t);
  ASSERT_EQ(parts.size(), 2u);
  const MonomialDescriptor l0{fa.whole, family_a_lambda_r(fa, 0)};
  const MonomialDescriptor l2{fa.whole, family_a_lambda_r(fa, 2)};
  for (const auto& c : parts) {
    if (c.multiplicity == 2) EXPECT_EQ(mackey_inner_product(c.descriptor, l0), 1u);
    else EXPECT_EQ(mackey_inner_product(c.descriptor, l2), 1u);
  }

  const MonomialDescriptor one{fa.whole, LinearCharacter::principal(fa.whole)};
  const auto triv = decompose_against_irr(one, t);
  ASSERT_EQ(triv.size(), 1u);
  EXPECT_EQ(triv[0].multiplicity, 1u);
  EXPECT_EQ(mackey_inner_product(triv[0].descriptor, one), 1u);

  EXPECT_GE(decompose_against_irr({fa.whole, LinearCharacter::principal(fa.h)}, t).size(), 5u);
}

TEST(Oracle, ClassCountAcrossGroups) {
  for (const auto& g : {family_a(3).whole, family_a(5).whole, Subgroup::full(cyclic(5, 2))}) {
    const auto t = irr_exhaustive(g, 625);
    EXPECT_EQ(t.irreducibles.size(), conjugacy_class_count(g));
    EXPECT_EQ(t.degree_square_sum(), g.order());
  }
}

TEST(Oracle, SizeGuard) {
  EXPECT_THROW(irr_exhaustive(family_a(5).whole, 243), SizeGuardError);
}
