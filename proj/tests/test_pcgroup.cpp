#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "pchar/arith.hpp"
#include "pchar/error.hpp"
#include "test_util.hpp"

using namespace pchar;
using namespace pchar::testing;

namespace {

std::vector<GroupPtr> sample_groups() {
  return {family_a(3).group, family_a(5).group, family_b(7).group, wreath_lift(family_a(3)).group, cyclic(3, 3)};
}

}  // namespace

TEST(PcGroup, FamilyAProductAC) {
  const auto fa = family_a(3);
  const PcGroup& G = *fa.group;
  EXPECT_EQ(G.multiply(G.generator(1), G.generator(0)), parse_word(G, "c a b"));
  EXPECT_EQ(format_named_word(G.presentation(), G.multiply(G.generator(1), G.generator(0))), "c^1 a^1 b^1");
}

TEST(PcGroup, FamilyAConjugateBySquare) {
  const auto fa = family_a(3);
  const PcGroup& G = *fa.group;
  const Element x = G.conjugate(G.generator(1), G.power(G.generator(0), 2));
  EXPECT_EQ(x, parse_word(G, "a b^2 z"));
}

TEST(PcGroup, IdentityAndInverse) {
  std::mt19937_64 rng(11);
  for (const auto& g : sample_groups()) {
    const PcGroup& G = *g;
    for (int k = 0; k < 200; ++k) {
      const Element x = random_element(G, rng);
      EXPECT_EQ(G.multiply(G.identity(), x), x);
      EXPECT_EQ(G.multiply(x, G.identity()), x);
      EXPECT_TRUE(G.multiply(x, G.inverse(x)).is_identity());
      EXPECT_TRUE(G.multiply(G.inverse(x), x).is_identity());
    }
  }
}

TEST(PcGroup, AssociativityRandomTriples) {
  std::mt19937_64 rng(12);
  for (const auto& g : sample_groups()) {
    const PcGroup& G = *g;
    for (int k = 0; k < 1000; ++k) {
      const Element x = random_element(G, rng), y = random_element(G, rng), z = random_element(G, rng);
      ASSERT_EQ(G.multiply(G.multiply(x, y), z), G.multiply(x, G.multiply(y, z)));
    }
  }
}

TEST(PcGroup, PowersAndOrders) {
  std::mt19937_64 rng(13);
  for (const auto& g : sample_groups()) {
    const PcGroup& G = *g;
    for (int k = 0; k < 100; ++k) {
      const Element x = random_element(G, rng);
      const unsigned e = G.order_log(x);
      EXPECT_TRUE(G.power(x, ipow(G.prime(), e)).is_identity());
      if (e > 0) EXPECT_FALSE(G.power(x, ipow(G.prime(), e - 1)).is_identity());
      EXPECT_EQ(G.power(x, 5), G.multiply(G.power(x, 2), G.power(x, 3)));
    }
  }
}

TEST(PcGroup, ConjugateAndCommutator) {
  std::mt19937_64 rng(14);
  const auto G = family_b(7).group;
  for (int k = 0; k < 200; ++k) {
    const Element x = random_element(*G, rng), g = random_element(*G, rng);
    EXPECT_EQ(G->conjugate(x, g), G->multiply(G->multiply(G->inverse(g), x), g));
    EXPECT_EQ(G->multiply(x, G->commutator(x, g)), G->conjugate(x, g));
  }
}

TEST(PcGroup, RankRoundTrip) {
  const auto G = family_a(3).group;
  for (std::uint64_t r = 0; r < G->order(); ++r) EXPECT_EQ(G->rank(G->unrank(r)), r);
}

TEST(PcGroup, FamiliesAreConsistent) {
  for (unsigned p : {3u, 5u, 7u, 11u, 13u}) EXPECT_TRUE(consistency_check(family_a(p).group->presentation()).ok());
  for (unsigned p : {7u, 13u, 19u}) EXPECT_TRUE(consistency_check(family_b(p).group->presentation()).ok());
  EXPECT_TRUE(consistency_check(wreath_iterate(family_a(3), 2).group->presentation()).ok());
}

TEST(PcGroup, InconsistentPresentationRejected) {
  const auto pres = read_presentation_file(PCHAR_TEST_DATA "/inconsistent.pc");
  EXPECT_FALSE(consistency_check(pres).ok());
  EXPECT_THROW(PcGroup::create(pres), InconsistentPresentation);
}

TEST(PcGroup, DroppedTailIsStillAGroup) {
  // b^c = b instead of bz: z splits off as a direct factor.
  auto pres = family_a(3).group->presentation();
  pres.set_conjugate(2, 0, pres.unit(2));
  EXPECT_TRUE(consistency_check(pres).ok());
}

TEST(PresentationIo, RoundTripIsBitExact) {
  std::ifstream in(PCHAR_TEST_DATA "/family_a3.pc");
  std::stringstream ss;
  ss << in.rdbuf();
  const auto pres = parse_presentation(ss.str());
  EXPECT_EQ(format_presentation(pres), ss.str());
  for (const auto& f : {family_b(7), wreath_lift(family_a(3))}) {
    const std::string text = format_presentation(f.group->presentation());
    EXPECT_EQ(format_presentation(parse_presentation(text)), text);
  }
}

TEST(PresentationIo, ParseErrors) {
  EXPECT_THROW(parse_presentation("p 3\n"), ParseError);
  EXPECT_THROW(parse_presentation("p 4\ngens 1\n"), ParseError);
  EXPECT_THROW(parse_presentation("p 3\ngens 2\nconj 2 1 = g2^3\n"), ParseError);
  EXPECT_THROW(parse_presentation("p 3\ngens 2\nconj 1 2 = g2^1\n"), ParseError);
  EXPECT_THROW(parse_presentation("p 3\ngens 2\nfoo\n"), ParseError);
  EXPECT_THROW(parse_presentation("p 3\ngens 2\npow 1 = g3^1\n"), ParseError);
}

TEST(PresentationIo, WordsUseNames) {
  const auto G = family_a(3).group;
  EXPECT_EQ(parse_word(*G, "a^-1"), G->inverse(G->generator(1)));
  EXPECT_EQ(parse_word(*G, "g2"), G->generator(1));
  EXPECT_EQ(parse_word_list(*G, "a, z").size(), 2u);
  EXPECT_THROW(parse_word(*G, "q"), ParseError);
}
