#include <gtest/gtest.h>

#include "pchar/serialize.hpp"
#include "pchar/verify.hpp"

using namespace pchar;

namespace {

CheckParams at(unsigned p, std::size_t iterate = 0) {
  CheckParams cp;
  cp.prime = p;
  cp.iterate = iterate;
  cp.threads = 2;
  return cp;
}

}  // namespace

TEST(Verify, InducedEtaSeven) {
  const auto r = run_check("prop-dade", at(7));
  EXPECT_EQ(r.status, CheckStatus::kPass);
  EXPECT_EQ(r.expected["eta"], 4);
  EXPECT_EQ(r.computed["eta"], 4);
  EXPECT_EQ(r.certificates.size(), 1u);
}

TEST(Verify, GapScanThree) {
  const auto r = run_check("theorem-a-scan", at(3));
  EXPECT_EQ(r.status, CheckStatus::kPass);
  EXPECT_EQ(r.observed["characters"], 22 * 9);
}

TEST(Verify, PrincipalBoundThree) {
  const auto r = run_check("lemma-dade2", at(3));
  EXPECT_EQ(r.status, CheckStatus::kPass);
  EXPECT_EQ(r.observed["bound"], 5);
  EXPECT_GE(r.observed["eta"].get<std::size_t>(), 5u);
}

TEST(Verify, StatusesForGuardsAndHypotheses) {
  EXPECT_EQ(run_check("thm-examples2", at(5)).status, CheckStatus::kHypothesis);
  EXPECT_EQ(run_check("theorem-a-scan", at(7)).status, CheckStatus::kSizeGuard);
  EXPECT_EQ(run_check("no-such-check", at(3)).status, CheckStatus::kError);
}

TEST(Verify, FormulaFamilies) {
  for (const auto& r : {formula_orbit_exponents(5), formula_fiber_criterion(5), formula_mu_conjugation(7), formula_orbit_representative(13),
                        formula_cubic_values(19), formula_commutator(7)}) {
    EXPECT_TRUE(r.ok()) << r.name << " " << r.first_failure;
    EXPECT_GT(r.total, 0u);
  }
}

TEST(Report, EmptyDocument) {
  const auto doc = Json::parse(emit_report_json({}));
  EXPECT_EQ(doc["schema"], "pchar-report/v1");
  EXPECT_TRUE(doc["reports"].empty());
  EXPECT_EQ(doc["summary"]["total"], 0);
  EXPECT_TRUE(all_passed({}));
}

TEST(Report, Deterministic) {
  std::vector<CheckReport> a, b;
  for (unsigned p : {3u, 5u}) {
    a.push_back(run_check("prop-dade", at(p)));
    b.push_back(run_check("prop-dade", at(p)));
  }
  a.push_back(run_check("theorem-a-scan", at(3)));
  auto cp = at(3);
  cp.threads = 1;
  b.push_back(run_check("theorem-a-scan", cp));
  EXPECT_EQ(emit_report_json(a), emit_report_json(b));
  EXPECT_EQ(summary_table(a), summary_table(b));
}

TEST(Report, FailureFlipsExitStatus) {
  std::vector<CheckReport> rs{run_check("prop-dade", at(3))};
  EXPECT_TRUE(all_passed(rs));
  CheckReport bad;
  bad.name = "synthetic";
  bad.status = CheckStatus::kFail;
  rs.push_back(bad);
  EXPECT_FALSE(all_passed(rs));
  EXPECT_EQ(Json::parse(emit_report_json(rs))["summary"]["fail"], 1);
}

TEST(Certificate, RevalidatesAndDetectsTampering) {
  for (const auto& r : {run_check("prop-dade", at(5)), run_check("thm-examples2", at(7)),
                        run_check("thm-extensiondade", at(3))}) {
    ASSERT_EQ(r.certificates.size(), 1u);
    const auto& cert = r.certificates[0];
    const auto ok = revalidate_certificate(Json::parse(cert.dump()));
    EXPECT_TRUE(ok.ok) << ok.message;

    auto bad = cert;
    bad["constituents"][0]["multiplicity"] = bad["constituents"][0]["multiplicity"].get<int>() + 1;
    EXPECT_FALSE(revalidate_certificate(bad).ok);
    auto bad_eta = cert;
    bad_eta["eta"] = 99;
    EXPECT_FALSE(revalidate_certificate(bad_eta).ok);
  }
}

TEST(Parallel, CoversEveryIndexOnce) {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) EXPECT_EQ(h, 1);
  EXPECT_THROW(parallel_for(10, 3, [](std::size_t i) {
                 if (i == 7) throw std::runtime_error("boom");
               }),
               std::runtime_error);
}
