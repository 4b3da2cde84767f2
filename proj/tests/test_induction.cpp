#include <gtest/gtest.h>

#include "pchar/error.hpp"
#include "pchar/oracle.hpp"
#include "test_util.hpp"

using namespace pchar;
using namespace pchar::testing;

namespace {

MonomialDescriptor random_descriptor(const Subgroup& whole, const std::vector<Subgroup>& subgroups,
                                     std::mt19937_64& rng) {
  const auto& b = subgroups[std::uniform_int_distribution<std::size_t>(0, subgroups.size() - 1)(rng)];
  const auto chars = lin_all(b);
  return {whole, chars[std::uniform_int_distribution<std::size_t>(0, chars.size() - 1)(rng)]};
}

std::vector<Subgroup> flatten(const std::vector<std::vector<Subgroup>>& layers) {
  std::vector<Subgroup> out;
  for (const auto& l : layers) out.insert(out.end(), l.begin(), l.end());
  return out;
}

}  // namespace

TEST(Mackey, Examples) {
  const auto fa = family_a(3);
  const MonomialDescriptor one{fa.whole, LinearCharacter::principal(fa.whole)};
  const MonomialDescriptor l2{fa.whole, family_a_lambda_r(fa, 2)};
  const MonomialDescriptor l0{fa.whole, family_a_lambda_r(fa, 0)};
  EXPECT_EQ(mackey_inner_product(one, one), 1u);
  EXPECT_EQ(mackey_inner_product(l2, l2), 1u);
  EXPECT_EQ(mackey_inner_product(l0, l2), 0u);
}

TEST(Mackey, MatchesNaiveOnRandomPairs) {
  std::mt19937_64 rng(41);
  std::size_t pairs = 0;
  for (unsigned p : {3u, 5u}) {
    const auto fa = family_a(p);
    const auto subs = flatten(subgroup_lattice(fa.whole));
    for (int k = 0; k < (p == 3 ? 60 : 15); ++k) {
      const auto d1 = random_descriptor(fa.whole, subs, rng);
      const auto d2 = random_descriptor(fa.whole, subs, rng);
      const Rational naive = naive_induced_inner_product(d1, d2);
      ASSERT_TRUE(naive.is_integer());
      EXPECT_EQ(static_cast<std::int64_t>(mackey_inner_product(d1, d2)), naive.num)
          << d1.character.to_string() << " / " << d2.character.to_string();
      ++pairs;
    }
  }
  EXPECT_GE(pairs, 50u);
}

TEST(Mackey, MatchesNaiveOnCyclicNine) {
  const auto g = cyclic(3, 3);
  const auto whole = Subgroup::full(g);
  const auto subs = flatten(subgroup_lattice(whole));
  for (const auto& b1 : subs)
    for (const auto& b2 : subs)
      for (const auto& m1 : lin_all(b1))
        for (const auto& m2 : lin_all(b2)) {
          const MonomialDescriptor d1{whole, m1}, d2{whole, m2};
          EXPECT_EQ(static_cast<std::int64_t>(mackey_inner_product(d1, d2)), naive_induced_inner_product(d1, d2).num);
        }
}

TEST(Mackey, WreathLiftedConstituentsAreIrreducible) {
  const auto w = wreath_lift(family_a(3));
  for (const auto& c : w.predicted) EXPECT_EQ(mackey_inner_product(c.descriptor, c.descriptor), 1u);
}

TEST(Certify, ValidCertificate) {
  const auto fa = family_a(3);
  const MonomialDescriptor target{fa.whole, fa.lambda};
  const auto res = certify_decomposition(
      target, {{{fa.whole, family_a_lambda_r(fa, 0)}, 2}, {{fa.whole, family_a_lambda_r(fa, 2)}, 1}});
  ASSERT_TRUE(res.ok());
  EXPECT_EQ(res.certificate->eta(), 2u);
  EXPECT_TRUE(res.certificate->checks.all());
  EXPECT_EQ(res.certificate->target_norm, 5u);

  const MonomialDescriptor one{fa.whole, LinearCharacter::principal(fa.whole)};
  const auto trivial = certify_decomposition(one, {{one, 1}});
  ASSERT_TRUE(trivial.ok());
  EXPECT_EQ(trivial.certificate->eta(), 1u);
}

TEST(Certify, ReportsFailures) {
  const auto fa = family_a(3);
  const MonomialDescriptor target{fa.whole, fa.lambda};
  std::vector<Constituent> cands;
  for (std::int64_t r = 0; r < 3; ++r) cands.push_back({{fa.whole, family_a_lambda_r(fa, r)}, 1});
  const auto res = certify_decomposition(target, cands);
  EXPECT_FALSE(res.ok());
  std::set<std::string> kinds;
  for (const auto& f : res.failures) kinds.insert(f.check);
  EXPECT_TRUE(kinds.count("multiplicities"));
  EXPECT_TRUE(kinds.count("distinct"));
  bool saw_two = false;
  for (const auto& f : res.failures)
    if (f.check == "multiplicities" && f.actual == 2 && f.expected == 1) saw_two = true;
  EXPECT_TRUE(saw_two);
}

TEST(Certify, DegreeAuditCatchesMissingConstituent) {
  const auto fa = family_a(3);
  const MonomialDescriptor target{fa.whole, fa.lambda};
  const auto res = certify_decomposition(target, {{{fa.whole, family_a_lambda_r(fa, 0)}, 2}});
  EXPECT_FALSE(res.ok());
  std::set<std::string> kinds;
  for (const auto& f : res.failures) kinds.insert(f.check);
  EXPECT_TRUE(kinds.count("degree"));
}

TEST(Eta, Examples) {
  const auto fa = family_a(5);
  EXPECT_EQ(eta(fa.lambda, fa.whole, *fa.hints).count, 3u);
  const auto whole = eta(LinearCharacter::principal(fa.whole), fa.whole);
  EXPECT_EQ(whole.count, 1u);
  EXPECT_EQ(whole.tier, 0);

  const auto fb = family_b(7);
  const auto rb = eta(fb.lambda, fb.whole, *fb.hints);
  EXPECT_EQ(rb.count, 3u);
  auto ms = rb.certificate.multiplicities();
  std::sort(ms.begin(), ms.end());
  EXPECT_EQ(ms, (std::vector<std::uint64_t>{1, 3, 3}));
  for (const auto& c : rb.certificate.constituents) EXPECT_EQ(c.descriptor.degree(), 49u);
}

TEST(Eta, FrobeniusIdentity) {
  const auto fa = family_a(3);
  for (const auto& layer : subgroup_lattice(fa.whole))
    for (const auto& h : layer)
      for (const auto& theta : lin_all(h)) {
        const auto r = eta(theta, fa.whole, *fa.hints);
        std::uint64_t sq = 0;
        for (auto m : r.certificate.multiplicities()) sq += m * m;
        EXPECT_EQ(sq, mackey_inner_product({fa.whole, theta}, {fa.whole, theta}));
      }
}

TEST(Eta, TiersAgreeWithOracle) {
  const auto fa = family_a(3);
  EtaHints abelian = *fa.hints;
  abelian.tiers = kTierAbelian;
  EtaHints oracle;
  oracle.tiers = kTierOracle;
  oracle.irr = std::make_shared<IrrTable>(irr_exhaustive(fa.whole));
  std::size_t compared = 0;
  for (const auto& layer : subgroup_lattice(fa.whole))
    for (const auto& h : layer)
      for (const auto& theta : lin_all(h)) {
        EtaResult fast;
        try {
          fast = eta(theta, fa.whole, abelian);
        } catch (const NoStrategyError&) {
          continue;
        }
        const auto slow = eta(theta, fa.whole, oracle);
        ASSERT_EQ(fast.count, slow.count);
        for (std::size_t i = 0; i < fast.count; ++i) {
          const auto& c = fast.certificate.constituents[i];
          std::size_t matches = 0;
          for (const auto& o : slow.certificate.constituents)
            if (mackey_inner_product(c.descriptor, o.descriptor) == 1) {
              ++matches;
              EXPECT_EQ(c.multiplicity, o.multiplicity);
            }
          EXPECT_EQ(matches, 1u);
        }
        ++compared;
      }
  EXPECT_GT(compared, 100u);
}

TEST(Eta, WreathTierAgreesWithOracle) {
  // C_3 wr C_3 has order 81, small enough for the oracle.
  for (std::int64_t a : {1, 2}) {
    auto base = cyclic_instance(3);
    base.lambda = LinearCharacter::make(base.whole, {a}, 3);
    base.predicted = {{{base.whole, base.lambda}, 1}};
    const auto w = wreath_lift(base);
    EtaHints tier2 = *w.hints;
    tier2.tiers = kTierWreath;
    const auto fast = eta(w.lambda, w.whole, tier2);
    EXPECT_EQ(fast.tier, 2);
    EtaHints oracle;
    oracle.tiers = kTierOracle;
    const auto slow = eta(w.lambda, w.whole, oracle);
    EXPECT_EQ(fast.count, slow.count);
    EXPECT_EQ(fast.count, 1u);

    const auto one = eta(LinearCharacter::principal(w.h), w.whole, tier2);
    EXPECT_EQ(one.count, eta(LinearCharacter::principal(w.h), w.whole, oracle).count);
  }
}

TEST(Eta, NoStrategy) {
  const auto w = wreath_lift(family_a(3));
  EtaHints none;
  none.tiers = kTierOracle;
  // Above the oracle bound the oracle tier does not apply.
  EXPECT_THROW(eta(w.lambda, w.whole, none), NoStrategyError);
  none.tiers = 0;
  EXPECT_THROW(eta(w.lambda, w.whole, none), NoStrategyError);
}

TEST(CentralSplit, Additivity) {
  for (unsigned p : {3u, 5u}) {
    const auto fa = family_a(p);
    EtaHints hints;
    hints.tiers = kTierOracle;
    hints.oracle_bound = fa.hints->oracle_bound;
    hints.irr = std::make_shared<IrrTable>(irr_exhaustive(fa.whole, hints.oracle_bound));
    const auto a = Subgroup::generated_by(fa.group, std::vector<Element>{fa.group->generator(1)});
    for (const auto& theta : lin_all(a)) {
      const auto s = central_extension_split(theta, fa.subgroups.at("Z"), fa.whole, hints);
      EXPECT_EQ(s.extensions.size(), p);
      EXPECT_TRUE(s.holds());
      if (theta.is_principal())
        EXPECT_NE(std::find_if(s.extensions.begin(), s.extensions.end(),
                               [](const LinearCharacter& c) { return c.is_principal(); }),
                  s.extensions.end());
    }
  }
}

TEST(CentralSplit, RejectsNonCentral) {
  const auto fa = family_a(3);
  const auto b = Subgroup::generated_by(fa.group, std::vector<Element>{fa.group->generator(2)});
  EXPECT_THROW(central_extension_split(fa.lambda, b, fa.whole), PreconditionError);
}
