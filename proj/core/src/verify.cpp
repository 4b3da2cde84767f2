#include "pchar/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "pchar/arith.hpp"
#include "pchar/error.hpp"
#include "pchar/families.hpp"

namespace pchar {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSizeGuard: return "size-guard";
    case CheckStatus::kHypothesis: return "hypothesis";
    case CheckStatus::kError: return "error";
  }
  return "error";
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// ---------------------------------------------------------------------------
// Formula families

namespace {

struct Tally {
  explicit Tally(std::string name, unsigned p) {
    r.name = std::move(name);
    r.prime = p;
  }
  FormulaResult r;
  void record(bool ok, const std::string& what) {
    ++r.total;
    if (ok) ++r.passed;
    else if (r.first_failure.empty()) r.first_failure = what;
  }
};

}  // namespace

// Λ_r conjugated by c^{-i} is α^{ri + i(i-1)/2} × β^{r+i} × γ.
FormulaResult formula_orbit_exponents(unsigned p) {
  Tally t("orbit-exponents", p);
  const auto fa = family_a(p);
  const PcGroup& G = *fa.group;
  const Element cinv = G.inverse(fa.elements.at("c"));
  const auto P = static_cast<std::int64_t>(p);
  for (std::int64_t r = 0; r < P; ++r)
    for (std::int64_t i = 0; i < P; ++i) {
      const auto got = conjugate_character(family_a_lambda_r(fa, r), G.power(cinv, static_cast<std::uint64_t>(i)));
      const auto want = LinearCharacter::make(fa.subgroups.at("A"), {mod(r * i + i * (i - 1) / 2, P), mod(r + i, P), 1}, p);
      t.record(got == want, "r=" + std::to_string(r) + " i=" + std::to_string(i));
    }
  return t.r;
}

// Λ_r^{c^{-j}} restricts to λ iff j ≡ 0 or j ≡ 1 - 2r, and then equals Λ_{r+j}
// (which is Λ_{1-r} in the second case).
FormulaResult formula_fiber_criterion(unsigned p) {
  Tally t("fiber-criterion", p);
  const auto fa = family_a(p);
  const PcGroup& G = *fa.group;
  const Element cinv = G.inverse(fa.elements.at("c"));
  const auto P = static_cast<std::int64_t>(p);
  for (std::int64_t r = 0; r < P; ++r)
    for (std::int64_t j = 0; j < P; ++j) {
      const auto conj = conjugate_character(family_a_lambda_r(fa, r), G.power(cinv, static_cast<std::uint64_t>(j)));
      const bool in_fiber = conj.restrict_to(fa.h) == fa.lambda;
      const bool predicted = j == 0 || j == mod(1 - 2 * r, P);
      bool ok = in_fiber == predicted;
      if (ok && j == mod(1 - 2 * r, P)) ok = conj == family_a_lambda_r(fa, 1 - r);
      t.record(ok, "r=" + std::to_string(r) + " j=" + std::to_string(j));
    }
  return t.r;
}

// μ_{e,0,0} conjugated by u1^{-i} u2^{-j} is μ_{e + C(i,3) + ij, C(i,2) + j, i}.
FormulaResult formula_mu_conjugation(unsigned p) {
  Tally t("mu-conjugation", p);
  const auto fb = family_b(p);
  const PcGroup& G = *fb.group;
  const Element u1inv = G.inverse(fb.elements.at("u1"));
  const Element u2inv = G.inverse(fb.elements.at("u2"));
  const auto P = static_cast<std::int64_t>(p);
  for (std::int64_t e = 0; e < P; ++e) {
    const auto mu = family_b_mu(fb, e, 0, 0);
    for (std::int64_t i = 0; i < P; ++i)
      for (std::int64_t j = 0; j < P; ++j) {
        const Element g = G.multiply(G.power(u1inv, static_cast<std::uint64_t>(i)), G.power(u2inv, static_cast<std::uint64_t>(j)));
        const auto want = family_b_mu(fb, e + binomial_mod(i, 3, P) + i * j, binomial_mod(i, 2, P) + j, i);
        t.record(conjugate_character(mu, g) == want,
                 "e=" + std::to_string(e) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
      }
  }
  return t.r;
}

// With e = r(1 - i^3) and j = r - C(i,2): μ_{e,0,0}^{u1^{-i} u2^{-j}} = μ_{r,r,i}.
FormulaResult formula_orbit_representative(unsigned p) {
  Tally t("orbit-representative", p);
  const auto fb = family_b(p);
  const PcGroup& G = *fb.group;
  const Element u1inv = G.inverse(fb.elements.at("u1"));
  const Element u2inv = G.inverse(fb.elements.at("u2"));
  const auto P = static_cast<std::int64_t>(p);
  const std::int64_t r = fb.r;
  for (std::int64_t i = 1; i < P; ++i) {
    const std::int64_t e = mod(r * (1 - i * i * i), P);
    const std::int64_t j = mod(r - binomial_mod(i, 2, P), P);
    const Element g = G.multiply(G.power(u1inv, static_cast<std::uint64_t>(i)), G.power(u2inv, static_cast<std::uint64_t>(j)));
    t.record(conjugate_character(family_b_mu(fb, e, 0, 0), g) == family_b_mu(fb, r, r, i), "i=" + std::to_string(i));
  }
  return t.r;
}

// For every r: |{r(1 - i^3)}| = (p+2)/3 and each value with i != 0 has
// exactly three solutions.
FormulaResult formula_cubic_values(unsigned p) {
  Tally t("cubic-values", p);
  for (std::int64_t r = 1; r < static_cast<std::int64_t>(p); ++r) {
    t.record(cubic_value_set(r, p).size() == (p + 2) / 3, "r=" + std::to_string(r) + " cardinality");
    for (auto e : cubic_values_nonzero_i(r, p))
      t.record(cubic_solution_count(e, r, p) == 3, "r=" + std::to_string(r) + " e=" + std::to_string(e));
  }
  return t.r;
}

// a^{c^j} = a b^j z^{C(j,2)} in family a.
FormulaResult formula_commutator(unsigned p) {
  Tally t("commutator", p);
  const auto fa = family_a(p);
  const PcGroup& G = *fa.group;
  const Element a = G.generator(1), b = G.generator(2), z = G.generator(3), c = G.generator(0);
  for (unsigned j = 0; j < p; ++j) {
    const Element want = G.multiply(G.multiply(a, G.power(b, j)),
                                    G.power(z, static_cast<std::uint64_t>(binomial_mod(j, 2, p))));
    t.record(G.conjugate(a, G.power(c, j)) == want, "j=" + std::to_string(j));
  }
  return t.r;
}

// ---------------------------------------------------------------------------
// Checks

namespace {

struct Outcome {
  Json expected;
  Json computed;
  Json observed = Json::object();
  bool pass = false;
  std::string detail;
  Json certificates = Json::array();
  std::size_t certified = 0;
};

unsigned pick(unsigned prime, unsigned fallback) { return prime == 0 ? fallback : prime; }

bool extends_by_index_p(const Subgroup& h, const Subgroup& z1) {
  return join(h, z1).order_log() == h.order_log() + 1;
}

Outcome check_family_a_eta(const CheckParams& cp) {
  const unsigned p = pick(cp.prime, 3);
  const auto fa = family_a(p);
  const auto r = eta(fa.lambda, fa.whole, *fa.hints);
  Outcome o;
  o.expected = {{"eta", (p + 1) / 2}};
  o.computed = {{"eta", r.count}};
  o.pass = o.expected == o.computed;
  o.detail = "tier " + std::to_string(r.tier) + ", |G:H| = p^2";
  o.certificates.push_back(certificate_to_json(r.certificate));
  o.certified = 1;
  return o;
}

Outcome check_family_b_eta(const CheckParams& cp) {
  const unsigned p = pick(cp.prime, 7);
  const auto fb = family_b(p);
  const auto P = static_cast<std::int64_t>(p);
  const auto r = eta(fb.lambda, fb.whole, *fb.hints);

  Json want = Json::array();
  for (auto e : cubic_value_set(fb.r, p))
    want.push_back({{"e", e}, {"multiplicity", e == fb.r ? 1 : 3}, {"degree", p * p}});
  // A constituent μ_{r,r,f} of λ^M lies in the orbit of μ_{e,0,0} with e = r(1 - f^3).
  std::map<std::int64_t, Json> got_by_e;
  for (const auto& c : r.certificate.constituents) {
    const auto& d = c.descriptor;
    std::int64_t e = -1;
    if (d.inducing() == fb.subgroups.at("M") && d.character.value_order() == p) {
      const std::int64_t f = d.character.exponents()[2];
      e = mod(fb.r * (1 - f * f * f), P);
    }
    got_by_e[e] = {{"e", e}, {"multiplicity", c.multiplicity}, {"degree", d.degree()}};
  }
  Json got = Json::array();
  for (auto& [e, j] : got_by_e) got.push_back(j);

  Outcome o;
  o.expected = {{"eta", (p + 2) / 3}, {"constituents", want}};
  o.computed = {{"eta", r.count}, {"constituents", got}};
  o.pass = o.expected == o.computed;
  std::string mults;
  for (auto m : r.certificate.multiplicities()) mults += (mults.empty() ? "" : ",") + std::to_string(m);
  o.detail = "r = " + std::to_string(fb.r) + ", multiplicities (" + mults + ")";
  o.certificates.push_back(certificate_to_json(r.certificate));
  o.certified = 1;
  return o;
}

Outcome check_wreath_eta(const CheckParams& cp) {
  const unsigned p = pick(cp.prime, 3);
  const std::size_t k = cp.iterate == 0 ? 1 : cp.iterate;
  const auto w = wreath_iterate(family_a(p), k);
  const auto r = eta(w.lambda, w.whole, *w.hints);
  const auto predicted = certify_decomposition({w.whole, w.lambda}, w.predicted);
  std::size_t order_log = 4;
  for (std::size_t i = 0; i < k; ++i) order_log = p * order_log + 1;

  Outcome o;
  o.expected = {{"eta", (p + 1) / 2}, {"index_log", 2 + k}, {"group_order_log", order_log}, {"predicted_certified", true}};
  o.computed = {{"eta", r.count},
                {"index_log", w.whole.order_log() - w.h.order_log()},
                {"group_order_log", w.group->ngens()},
                {"predicted_certified", predicted.ok()}};
  o.pass = o.expected == o.computed;
  o.detail = "wreath iterate " + std::to_string(k) + ", tier " + std::to_string(r.tier);
  o.certificates.push_back(certificate_to_json(r.certificate));
  o.certified = predicted.ok() ? 2 : 1;
  return o;
}

Outcome check_principal_bound(const CheckParams& cp) {
  const unsigned p = pick(cp.prime, 3);
  if (cp.family != "a") throw HypothesisError("lemma-dade2 runs on family a and its wreath iterates");
  const auto f = wreath_iterate(family_a(p), cp.iterate);
  const auto r = eta(LinearCharacter::principal(f.h), f.whole, *f.hints);
  const std::size_t bound = f.index_log * (p - 1) + 1;
  Outcome o;
  o.expected = {{"bound_holds", true}};
  o.computed = {{"bound_holds", r.count >= bound}};
  o.observed = {{"eta", r.count}, {"bound", bound}};
  o.pass = o.expected == o.computed;
  o.detail = "n = " + std::to_string(f.index_log) + ", tier " + std::to_string(r.tier);
  o.certificates.push_back(certificate_to_json(r.certificate));
  o.certified = 1;
  return o;
}

struct ScanItem {
  LinearCharacter theta;
  std::size_t subgroup_index = 0;
};

// Runs η over the items in parallel and folds the results in item order.
Outcome run_scan(const FamilyInstance& f, const std::vector<ScanItem>& items, std::size_t subgroups,
                 std::size_t gap_low, unsigned threads) {
  EtaHints hints = *f.hints;
  hints.irr = std::make_shared<IrrTable>(irr_exhaustive(f.whole, hints.oracle_bound));
  std::vector<EtaResult> results(items.size());
  parallel_for(items.size(), threads, [&](std::size_t i) { results[i] = eta(items[i].theta, f.whole, hints); });

  std::map<std::size_t, std::size_t> spectrum;
  std::size_t violations = 0;
  Outcome o;
  for (const auto& r : results) {
    if (spectrum[r.count]++ == 0) o.certificates.push_back(certificate_to_json(r.certificate));
    if (r.count != 1 && r.count < gap_low) ++violations;
  }
  Json spec = Json::object();
  for (auto [e, n] : spectrum) spec[std::to_string(e)] = n;
  o.expected = {{"violations", 0}, {"exhaustive", true}};
  o.computed = {{"violations", violations}, {"exhaustive", !items.empty()}};
  o.observed = {{"subgroups", subgroups}, {"characters", items.size()}, {"spectrum", spec}};
  o.pass = o.expected == o.computed;
  o.certified = results.size();
  o.detail = "allowed: eta = 1 or eta >= " + std::to_string(gap_low);
  return o;
}

Outcome check_gap_scan(const CheckParams& cp) {
  const unsigned p = pick(cp.prime, 3);
  const auto fa = family_a(p);
  const auto hs = enumerate_subgroups(fa.whole, 2);
  std::vector<ScanItem> items;
  for (std::size_t k = 0; k < hs.size(); ++k) {
    if (hs[k].is_abelian()) {
      for (auto& theta : lin_all(hs[k])) items.push_back({std::move(theta), k});
    } else {
      for (const auto& d : irr_exhaustive(hs[k], hs[k].order()).irreducibles) items.push_back({d.character, k});
    }
  }
  return run_scan(fa, items, hs.size(), (p + 1) / 2, cp.threads);
}

Outcome check_normal_scan(const CheckParams& cp) {
  const unsigned p = pick(cp.prime, 3);
  const auto fa = family_a(p);
  std::vector<Subgroup> normals;
  for (const auto& layer : subgroup_lattice(fa.whole, fa.whole.order_log()))
    for (const auto& h : layer)
      if (is_normal(fa.whole, h)) normals.push_back(h);
  // θ ∈ Irr(H) is carried as ν^H with ν linear; then θ^G = ν^G.
  std::vector<ScanItem> items;
  for (std::size_t k = 0; k < normals.size(); ++k)
    for (const auto& d : irr_exhaustive(normals[k], normals[k].order()).irreducibles) items.push_back({d.character, k});
  return run_scan(fa, items, normals.size(), p, cp.threads);
}

Outcome check_central_split(const CheckParams& cp) {
  const unsigned p = pick(cp.prime, 3);
  const auto fa = family_a(p);
  const Subgroup& z1 = fa.subgroups.at("Z");
  EtaHints hints = *fa.hints;
  hints.tiers = kTierOracle;
  hints.irr = std::make_shared<IrrTable>(irr_exhaustive(fa.whole, hints.oracle_bound));

  std::vector<LinearCharacter> thetas;
  std::size_t subgroups = 0;
  for (const auto& layer : subgroup_lattice(fa.whole, fa.whole.order_log()))
    for (const auto& h : layer) {
      if (!extends_by_index_p(h, z1)) continue;
      ++subgroups;
      for (auto& t : lin_all(h)) thetas.push_back(std::move(t));
    }
  std::vector<CentralSplit> splits(thetas.size());
  parallel_for(thetas.size(), cp.threads,
               [&](std::size_t i) { splits[i] = central_extension_split(thetas[i], z1, fa.whole, hints); });
  std::size_t violations = 0, inequality = 0;
  for (const auto& s : splits) {
    if (!s.holds()) ++violations;
    for (auto e : s.extension_etas)
      if (s.eta_theta < e + (p - 1)) ++inequality;
  }
  Outcome o;
  o.expected = {{"violations", 0}, {"inequality_violations", 0}, {"enough_configurations", true}};
  o.computed = {{"violations", violations},
                {"inequality_violations", inequality},
                {"enough_configurations", splits.size() >= 10}};
  o.observed = {{"configurations", splits.size()}, {"subgroups", subgroups}};
  o.pass = o.expected == o.computed;
  o.detail = std::to_string(splits.size()) + " configurations (H, Z1, theta) over " + std::to_string(subgroups) +
             " subgroups, oracle tier";
  o.certified = splits.size() * (p + 1);
  return o;
}

Outcome check_formula_suite(const CheckParams& cp) {
  std::vector<FormulaResult> rs;
  auto family_a_ok = [](unsigned p) { return p >= 3 && is_prime(p); };
  auto family_b_ok = [](unsigned p) { return is_prime(p) && p > 5 && (p - 1) % 3 == 0; };
  auto cubic_ok = [](unsigned p) { return is_prime(p) && (p - 1) % 3 == 0; };
  if (cp.prime == 0) {
    for (unsigned p : {3u, 5u, 7u}) rs.push_back(formula_orbit_exponents(p));
    for (unsigned p : {3u, 5u, 7u}) rs.push_back(formula_fiber_criterion(p));
    rs.push_back(formula_mu_conjugation(7));
    for (unsigned p : {7u, 13u}) rs.push_back(formula_orbit_representative(p));
    for (unsigned p : {7u, 13u, 19u}) rs.push_back(formula_cubic_values(p));
    for (unsigned p : {3u, 5u, 7u}) rs.push_back(formula_commutator(p));
  } else {
    const unsigned p = cp.prime;
    if (!family_a_ok(p)) throw HypothesisError("formula suite needs an odd prime");
    rs.push_back(formula_orbit_exponents(p));
    rs.push_back(formula_fiber_criterion(p));
    rs.push_back(formula_commutator(p));
    if (family_b_ok(p)) {
      rs.push_back(formula_mu_conjugation(p));
      rs.push_back(formula_orbit_representative(p));
    }
    if (cubic_ok(p)) rs.push_back(formula_cubic_values(p));
  }
  std::size_t cases = 0, failures = 0;
  Json list = Json::array();
  std::string first;
  for (const auto& r : rs) {
    cases += r.total;
    failures += r.total - r.passed;
    list.push_back({{"formula", r.name}, {"prime", r.prime}, {"passed", r.passed}, {"cases", r.total}});
    if (!r.ok() && first.empty()) first = r.name + " p=" + std::to_string(r.prime) + ": " + r.first_failure;
  }
  Outcome o;
  o.expected = {{"failures", 0}};
  o.computed = {{"failures", failures}};
  o.observed = {{"cases", cases}, {"formulas", list}};
  o.pass = o.expected == o.computed && cases > 0;
  o.detail = first.empty() ? std::to_string(rs.size()) + " formula families" : "first failure: " + first;
  return o;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"prop-dade",         "thm-examples2",    "thm-extensiondade",
                                              "lemma-normal-scan", "theorem-a-scan",   "lemma-dade2",
                                              "lemma-morethanp",   "formula-suite"};
  return names;
}

CheckReport run_check(const std::string& name, const CheckParams& params) {
  CheckReport rep;
  rep.name = name;
  rep.params = {{"prime", params.prime}, {"iterate", params.iterate}, {"family", params.family}};
  rep.provenance = "published";
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Outcome o;
    if (name == "prop-dade") o = check_family_a_eta(params);
    else if (name == "thm-examples2") o = check_family_b_eta(params);
    else if (name == "thm-extensiondade") o = check_wreath_eta(params);
    else if (name == "lemma-normal-scan") o = check_normal_scan(params);
    else if (name == "theorem-a-scan") o = check_gap_scan(params);
    else if (name == "lemma-dade2") o = check_principal_bound(params);
    else if (name == "lemma-morethanp") o = check_central_split(params);
    else if (name == "formula-suite") o = check_formula_suite(params);
    else throw PreconditionError("unknown check '" + name + "'");
    rep.expected = std::move(o.expected);
    rep.computed = std::move(o.computed);
    rep.observed = std::move(o.observed);
    rep.status = o.pass ? CheckStatus::kPass : CheckStatus::kFail;
    rep.detail = std::move(o.detail);
    rep.certificates = std::move(o.certificates);
    rep.certified = o.certified;
  } catch (const SizeGuardError& e) {
    rep.status = CheckStatus::kSizeGuard;
    rep.detail = e.what();
  } catch (const IndexOverflowError& e) {
    rep.status = CheckStatus::kSizeGuard;
    rep.detail = e.what();
  } catch (const HypothesisError& e) {
    rep.status = CheckStatus::kHypothesis;
    rep.detail = e.what();
  } catch (const std::exception& e) {
    rep.status = CheckStatus::kError;
    rep.detail = e.what();
  }
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::string emit_report_json(const std::vector<CheckReport>& reports, bool include_timing) {
  Json doc;
  doc["schema"] = "pchar-report/v1";
  Json list = Json::array();
  std::map<std::string, std::size_t> counts;
  for (const auto& r : reports) {
    Json j;
    j["check"] = r.name;
    j["params"] = r.params;
    j["status"] = to_string(r.status);
    j["provenance"] = r.provenance;
    j["expected"] = r.expected;
    j["computed"] = r.computed;
    j["observed"] = r.observed;
    j["detail"] = r.detail;
    j["certified"] = r.certified;
    j["certificates"] = r.certificates;
    if (include_timing) j["wall_seconds"] = r.wall_seconds;
    list.push_back(std::move(j));
    ++counts[to_string(r.status)];
  }
  doc["reports"] = std::move(list);
  Json summary;
  summary["total"] = reports.size();
  for (auto s : {CheckStatus::kPass, CheckStatus::kFail, CheckStatus::kSizeGuard, CheckStatus::kHypothesis,
                 CheckStatus::kError})
    summary[to_string(s)] = counts[to_string(s)];
  doc["summary"] = std::move(summary);
  return doc.dump(2) + "\n";
}

std::string summary_table(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  os << std::left << std::setw(20) << "check" << std::setw(8) << "prime" << std::setw(8) << "iter" << std::setw(12)
     << "status"
     << "computed\n";
  for (const auto& r : reports) {
    os << std::setw(20) << r.name << std::setw(8) << r.params.value("prime", 0u) << std::setw(8)
       << r.params.value("iterate", 0u) << std::setw(12) << to_string(r.status)
       << (r.computed.is_null() ? r.detail : r.computed.dump()) << "\n";
  }
  return os.str();
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::none_of(reports.begin(), reports.end(), [](const CheckReport& r) {
    return r.status == CheckStatus::kFail || r.status == CheckStatus::kError;
  });
}

}  // namespace pchar
