#include <gtest/gtest.h>

#include "pchar/error.hpp"
#include "pchar/orbit.hpp"
#include "test_util.hpp"

using namespace pchar;
using namespace pchar::testing;

namespace {

Subgroup gen(const FamilyInstance& f, const char* words) {
  return Subgroup::generated_by(f.group, parse_word_list(*f.group, words));
}

ElementSet conjugate_set(const PcGroup& G, const ElementSet& s, const Element& g) {
  ElementSet out;
  for (auto r : s) out.insert(G.rank(G.conjugate(G.unrank(r), g)));
  return out;
}

}  // namespace

TEST(Subgroup, GeneratedOrders) {
  const auto fa = family_a(3);
  EXPECT_EQ(gen(fa, "a, z").order(), 9u);
  EXPECT_EQ(Subgroup::generated_by(fa.group, std::vector<Element>{fa.group->identity()}).order(), 1u);
  const auto fb = family_b(7);
  EXPECT_EQ(gen(fb, "m0, m1, m3").order(), 343u);
}

TEST(Subgroup, MembershipMatchesClosure) {
  const auto fa = family_a(3);
  const PcGroup& G = *fa.group;
  for (const auto& layer : subgroup_lattice(fa.whole))
    for (const auto& b : layer) {
      const auto brute = closure(b);
      ASSERT_EQ(brute.size(), b.order());
      for (std::uint64_t r = 0; r < G.order(); ++r) EXPECT_EQ(b.contains(G.unrank(r)), brute.count(r) == 1);
    }
}

TEST(Subgroup, MembershipMatchesClosureFamilyB) {
  const auto fb = family_b(7);
  const PcGroup& G = *fb.group;
  std::mt19937_64 rng(21);
  for (const char* words : {"m0, m1, m3", "u1", "u2, m3", "m2, m1"}) {
    const Subgroup b = gen(fb, words);
    const auto brute = closure(b);
    ASSERT_EQ(brute.size(), b.order());
    for (auto r : brute) EXPECT_TRUE(b.contains(G.unrank(r)));
    for (int k = 0; k < 2000; ++k) {
      const Element x = random_element(G, rng);
      EXPECT_EQ(b.contains(x), brute.count(G.rank(x)) == 1);
    }
  }
}

TEST(Subgroup, RightCosets) {
  const auto fa = family_a(3);
  EXPECT_EQ(right_cosets(fa.subgroups.at("A")).transversal.size(), 3u);
  const auto fb = family_b(7);
  EXPECT_EQ(right_cosets(fb.subgroups.at("M")).transversal.size(), 49u);

  const auto w = wreath_lift(fa);
  const auto& ws = *w.hints->wreath;
  std::vector<Element> gens;
  for (const auto& x : fa.subgroups.at("A").igs()) gens.push_back(ws.embed(x, 0, w.group->ngens()));
  for (std::size_t c = 1; c < 3; ++c)
    for (std::size_t i = 0; i < 4; ++i) gens.push_back(ws.embed(fa.group->generator(i), c, w.group->ngens()));
  const auto b = Subgroup::generated_by(w.group, gens);
  EXPECT_EQ(right_cosets(b).transversal.size(), 9u);
  EXPECT_THROW(right_cosets(Subgroup::trivial(w.group)), IndexOverflowError);
}

TEST(Subgroup, RightCosetCanonicalForm) {
  const auto fa = family_a(3);
  const PcGroup& G = *fa.group;
  const auto rc = right_cosets(fa.h);
  std::set<std::uint64_t> reps;
  for (const auto& t : rc.transversal) {
    EXPECT_EQ(rc.canonical(t), t);
    reps.insert(G.rank(t));
  }
  EXPECT_EQ(reps.size(), 9u);
  for (std::uint64_t r = 0; r < G.order(); ++r) {
    const Element x = G.unrank(r);
    const Element c = rc.canonical(x);
    EXPECT_TRUE(reps.count(G.rank(c)));
    EXPECT_TRUE(fa.h.contains(G.multiply(x, G.inverse(c))));
  }
}

TEST(Subgroup, IntersectionExamples) {
  const auto fa = family_a(3);
  EXPECT_EQ(intersection(gen(fa, "a, z"), gen(fa, "z")), gen(fa, "z"));
  EXPECT_EQ(intersection(gen(fa, "a, b"), gen(fa, "b, z")), gen(fa, "b"));
  EXPECT_EQ(intersection(fa.h, fa.h), fa.h);
}

TEST(Subgroup, IntersectionMatchesBruteForce) {
  const auto fa = family_a(3);
  std::vector<Subgroup> all;
  for (const auto& layer : subgroup_lattice(fa.whole))
    for (const auto& b : layer) all.push_back(b);
  std::vector<ElementSet> sets;
  for (const auto& b : all) sets.push_back(closure(b));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      ElementSet both;
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                            std::inserter(both, both.begin()));
      EXPECT_EQ(closure(intersection(all[i], all[j])), both);
    }
}

TEST(Subgroup, StructureExamples) {
  const auto fa = family_a(3);
  EXPECT_EQ(center(fa.whole), fa.subgroups.at("Z"));
  EXPECT_EQ(normal_core(fa.whole, fa.h), fa.subgroups.at("Z"));
  EXPECT_EQ(derived_subgroup(fa.whole), gen(fa, "b, z"));
  EXPECT_TRUE(is_normal(fa.whole, fa.subgroups.at("A")));
  EXPECT_FALSE(is_normal(fa.whole, fa.h));
  const auto fb = family_b(7);
  EXPECT_EQ(center(fb.whole), fb.subgroups.at("Z"));
}

TEST(Subgroup, NormalCoreAndCentralizerMatchBruteForce) {
  const auto fa = family_a(3);
  const PcGroup& G = *fa.group;
  std::vector<Element> all_elements;
  for (std::uint64_t r = 0; r < G.order(); ++r) all_elements.push_back(G.unrank(r));
  for (const auto& layer : subgroup_lattice(fa.whole))
    for (const auto& b : layer) {
      ElementSet core = closure(b);
      bool normal = true;
      for (const auto& g : all_elements) {
        const auto conj = conjugate_set(G, closure(b), g);
        if (conj != closure(b)) normal = false;
        ElementSet both;
        std::set_intersection(core.begin(), core.end(), conj.begin(), conj.end(), std::inserter(both, both.begin()));
        core = std::move(both);
      }
      EXPECT_EQ(closure(normal_core(fa.whole, b)), core);
      EXPECT_EQ(is_normal(fa.whole, b), normal);

      ElementSet cent;
      for (const auto& g : all_elements) {
        bool commutes = true;
        for (const auto& h : b.igs())
          if (G.multiply(g, h) != G.multiply(h, g)) commutes = false;
        if (commutes) cent.insert(G.rank(g));
      }
      EXPECT_EQ(closure(centralizer(fa.whole, b.igs())), cent);
    }
}

TEST(Subgroup, ConjugateSubgroup) {
  const auto fa = family_a(3);
  const PcGroup& G = *fa.group;
  const Element c = fa.elements.at("c");
  EXPECT_EQ(closure(conjugate_subgroup(fa.h, c)), conjugate_set(G, closure(fa.h), c));
}

TEST(Subgroup, SubnormalChains) {
  const auto fa = family_a(3);
  const auto chain = subnormal_chain(fa.whole, fa.h);
  ASSERT_EQ(chain.size(), 3u);
  EXPECT_EQ(chain[1], fa.subgroups.at("A"));
  EXPECT_EQ(subnormal_chain(fa.whole, fa.whole).size(), 1u);

  const auto fb = family_b(7);
  const auto cb = subnormal_chain(fb.whole, fb.h);
  ASSERT_EQ(cb.size(), 4u);
  EXPECT_EQ(cb[1], fb.subgroups.at("M"));
  auto check = [](const Subgroup& whole, const Subgroup& b) {
    const auto ch = subnormal_chain(whole, b);
    EXPECT_EQ(ch.front(), b);
    for (std::size_t k = 0; k + 1 < ch.size(); ++k) {
      EXPECT_EQ(ch[k + 1].order_log(), ch[k].order_log() + 1);
      EXPECT_TRUE(is_normal(ch[k + 1], ch[k]));
    }
    EXPECT_EQ(ch.back(), whole);
  };
  for (const auto& layer : subgroup_lattice(fa.whole))
    for (const auto& b : layer) check(fa.whole, b);
  for (const char* words : {"u1", "m3", "u2, m0", "u1 u2, m2"}) check(fb.whole, gen(fb, words));
}

TEST(Subgroup, EnumerationMatchesBruteForce) {
  const auto fa = family_a(3);
  const auto brute = all_subgroups_brute(*fa.group);
  std::set<ElementSet> ours;
  std::size_t total = 0;
  for (const auto& layer : subgroup_lattice(fa.whole))
    for (const auto& b : layer) {
      ours.insert(closure(b));
      ++total;
    }
  EXPECT_EQ(total, brute.size());
  EXPECT_EQ(ours, brute);
  const auto order27 = enumerate_subgroups(fa.whole, 3);
  EXPECT_NE(std::find(order27.begin(), order27.end(), fa.subgroups.at("A")), order27.end());
  EXPECT_EQ(enumerate_subgroups(fa.whole, 4), std::vector<Subgroup>{fa.whole});

  const auto e = PcGroup::create(PcPresentation::elementary_abelian(3, 2, {}));
  EXPECT_EQ(enumerate_subgroups(Subgroup::full(e), 1).size(), 4u);
}

TEST(Subgroup, OrbitTimesStabilizerIsOrder) {
  const auto fa = family_a(3);
  const PcGroup& G = *fa.group;
  for (const auto& layer : subgroup_lattice(fa.whole))
    for (const auto& b : layer) {
      auto act = [&](const Element& w, std::size_t k) { return b.canonical_left(G.multiply(fa.whole.inverse_power(k, 1), w)); };
      const auto orbit = pc_orbit_stabilizer<Element, ElementHash>(G, fa.whole.igs(), G.identity(), act, 1000);
      const auto stab = Subgroup::generated_by(fa.group, orbit.stabilizer_gens);
      EXPECT_EQ(orbit.points.size() * stab.order(), G.order());
      EXPECT_EQ(stab, b);
    }
}

TEST(Subgroup, ConjugacyClasses) {
  EXPECT_EQ(conjugacy_class_count(family_a(3).whole), 17u);
  EXPECT_EQ(conjugacy_class_count(Subgroup::full(cyclic(3, 2))), 9u);
}
