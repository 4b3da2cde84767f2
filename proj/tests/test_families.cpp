#include <gtest/gtest.h>

#include "pchar/error.hpp"
#include "test_util.hpp"

using namespace pchar;
using namespace pchar::testing;

TEST(FamilyA, Three) {
  const auto fa = family_a(3);
  EXPECT_EQ(fa.whole.order(), 81u);
  EXPECT_EQ(fa.index_log, 2u);
  EXPECT_EQ(fa.predicted_eta, 2u);
  ASSERT_EQ(fa.predicted.size(), 2u);
  std::map<std::uint64_t, LinearCharacter> by_mult;
  for (const auto& c : fa.predicted) by_mult[c.multiplicity] = c.descriptor.character;
  EXPECT_EQ(by_mult.at(2), family_a_lambda_r(fa, 0));
  EXPECT_EQ(by_mult.at(1), family_a_lambda_r(fa, 2));
  EXPECT_TRUE(certify_decomposition({fa.whole, fa.lambda}, fa.predicted).ok());
}

TEST(FamilyA, FixedClass) {
  const auto fa = family_a(5);
  EXPECT_EQ(fa.predicted_eta, 3u);
  std::size_t singles = 0;
  for (const auto& c : fa.predicted)
    if (c.multiplicity == 1) {
      ++singles;
      EXPECT_EQ(c.descriptor.character, family_a_lambda_r(fa, 3));
    }
  EXPECT_EQ(singles, 1u);
  EXPECT_THROW(family_a(2), HypothesisError);
  EXPECT_THROW(family_a(9), HypothesisError);
}

TEST(FamilyA, Structure) {
  for (unsigned p : {3u, 5u, 7u}) {
    const auto fa = family_a(p);
    EXPECT_TRUE(consistency_check(fa.group->presentation()).ok());
    EXPECT_EQ(center(fa.whole), fa.subgroups.at("Z"));
    EXPECT_EQ(extension_fiber(fa.lambda, fa.subgroups.at("A")).size(), p);
    EXPECT_TRUE(certify_decomposition({fa.whole, fa.lambda}, fa.predicted).ok());
  }
}

TEST(FamilyB, Seven) {
  const auto fb = family_b(7);
  EXPECT_EQ(fb.r, 2);
  EXPECT_EQ(fb.predicted_eta, 3u);
  std::vector<std::uint64_t> ms;
  for (const auto& c : fb.predicted) ms.push_back(c.multiplicity);
  EXPECT_EQ(ms, (std::vector<std::uint64_t>{1, 3, 3}));
  EXPECT_TRUE(certify_decomposition({fb.whole, fb.lambda}, fb.predicted).ok());
  EXPECT_EQ(center(fb.whole), fb.subgroups.at("Z"));
  const auto orb = orbit_stabilizer(family_b_mu(fb, 0, 0, 0), fb.whole);
  EXPECT_EQ(orb.members.size(), 49u);
}

TEST(FamilyB, Thirteen) {
  const auto fb = family_b(13);
  EXPECT_EQ(fb.r, 4);
  EXPECT_EQ(fb.predicted_eta, 5u);
  EXPECT_EQ(cubic_value_set(4, 13), (std::vector<std::int64_t>{0, 4, 8, 10, 11}));
  EXPECT_TRUE(consistency_check(fb.group->presentation()).ok());
}

TEST(FamilyB, Hypotheses) {
  EXPECT_THROW(family_b(5), HypothesisError);
  EXPECT_THROW(family_b(11), HypothesisError);
  EXPECT_THROW(family_b(7, 3), HypothesisError);
  EXPECT_EQ(family_b(7, 9).r, 2);
}

TEST(Wreath, LiftOfFamilyA) {
  const auto w = wreath_lift(family_a(3));
  EXPECT_EQ(w.group->ngens(), 13u);
  EXPECT_EQ(w.whole.order_log() - w.h.order_log(), 3u);
  EXPECT_EQ(w.index_log, 3u);
  EXPECT_EQ(w.predicted_eta, 2u);
  EXPECT_TRUE(consistency_check(w.group->presentation()).ok());
  EXPECT_TRUE(certify_decomposition({w.whole, w.lambda}, w.predicted).ok());
  const PcGroup& G = *w.group;
  // t^{-1} (copy c) t = copy c + 1
  EXPECT_EQ(G.conjugate(G.generator(1), G.generator(0)), G.generator(5));
}

TEST(Wreath, IterateTwice) {
  const auto w = wreath_iterate(family_a(3), 2);
  EXPECT_EQ(w.group->ngens(), 40u);
  EXPECT_EQ(w.whole.order_log() - w.h.order_log(), 4u);
  EXPECT_EQ(w.predicted_eta, 2u);
  EXPECT_TRUE(certify_decomposition({w.whole, w.lambda}, w.predicted).ok());
}

TEST(Wreath, PrincipalBaseRejected) {
  auto base = family_a(3);
  base.lambda = LinearCharacter::principal(base.h);
  EXPECT_THROW(wreath_lift(base), PreconditionError);
}

TEST(Cubic, Examples) {
  EXPECT_EQ(cubic_value_set(2, 7), (std::vector<std::int64_t>{0, 2, 4}));
  EXPECT_EQ(cubic_solutions(0, 2, 7), (std::vector<std::int64_t>{1, 2, 4}));
  EXPECT_EQ(cubic_solution_count(0, 2, 7), 3u);
  EXPECT_EQ(cubic_value_set(4, 13).size(), 5u);
  EXPECT_THROW(cubic_value_set(1, 11), HypothesisError);
  EXPECT_THROW(cubic_value_set(0, 7), HypothesisError);
}

TEST(Cubic, AllResidues) {
  for (unsigned p : {7u, 13u, 19u, 31u})
    for (std::int64_t r = 1; r < static_cast<std::int64_t>(p); ++r) {
      EXPECT_EQ(cubic_value_set(r, p).size(), (p + 2) / 3);
      for (auto e : cubic_values_nonzero_i(r, p)) EXPECT_EQ(cubic_solution_count(e, r, p), 3u);
    }
}
