#include "pchar/induction.hpp"

#include <algorithm>
#include <unordered_set>

#include "pchar/arith.hpp"
#include "pchar/error.hpp"
#include "pchar/oracle.hpp"
#include "pchar/orbit.hpp"

namespace pchar {

std::uint64_t mackey_inner_product(const MonomialDescriptor& d1, const MonomialDescriptor& d2, std::size_t bound) {
  if (!(d1.ambient == d2.ambient)) throw PreconditionError("descriptors induce to different groups");
  // Both orderings give the same integer; walk the smaller coset space.
  const MonomialDescriptor& x = d1.degree_log() < d2.degree_log() ? d2 : d1;
  const MonomialDescriptor& y = d1.degree_log() < d2.degree_log() ? d1 : d2;
  const Subgroup& b1 = x.inducing();
  const Subgroup& b2 = y.inducing();
  const PcGroup& G = b1.group();

  const auto points = left_coset_reps(x.ambient, b2, bound);
  std::unordered_set<Element, ElementHash> seen;
  auto act = [&](const Element& w, std::size_t k) { return b2.canonical_left(G.multiply(b1.inverse_power(k, 1), w)); };
  std::uint64_t total = 0;
  for (const auto& w : points) {
    if (seen.count(w)) continue;
    auto orbit = pc_orbit_stabilizer<Element, ElementHash>(G, b1.igs(), w, act, bound);
    for (auto& pt : orbit.points) seen.insert(std::move(pt));
    const Element winv = G.inverse(w);
    bool agree = true;
    for (const auto& s : orbit.stabilizer_gens) {
      if (!same_value(x.character, s, y.character, G.multiply(G.multiply(winv, s), w))) {
        agree = false;
        break;
      }
    }
    if (agree) ++total;
  }
  return total;
}

std::vector<std::uint64_t> DecompositionCertificate::multiplicities() const {
  std::vector<std::uint64_t> out;
  for (const auto& c : constituents) out.push_back(c.multiplicity);
  return out;
}

std::string CertificationFailure::message() const {
  std::string s = check + " check failed";
  if (check == "irreducible") s += " for constituent " + std::to_string(i);
  if (check == "distinct") s += " for constituents " + std::to_string(i) + ", " + std::to_string(j);
  if (check == "multiplicities") s += " for constituent " + std::to_string(i);
  return s + ": expected " + std::to_string(expected) + ", got " + std::to_string(actual);
}

CertifyResult certify_decomposition(const MonomialDescriptor& target, std::vector<Constituent> candidates) {
  if (candidates.empty()) throw PreconditionError("certify_decomposition needs at least one candidate");
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Constituent& a, const Constituent& b) { return a.descriptor < b.descriptor; });
  DecompositionCertificate cert;
  cert.target = target;
  cert.constituents = std::move(candidates);
  const std::size_t n = cert.constituents.size();
  CertifyResult res;

  cert.gram.assign(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      cert.gram[i][j] = cert.gram[j][i] =
          mackey_inner_product(cert.constituents[i].descriptor, cert.constituents[j].descriptor);
  for (const auto& c : cert.constituents)
    cert.target_products.push_back(mackey_inner_product(target, c.descriptor));
  cert.target_norm = mackey_inner_product(target, target);

  auto fail = [&](std::string check, std::size_t i, std::size_t j, std::int64_t e, std::int64_t a) {
    res.failures.push_back({std::move(check), i, j, e, a});
  };
  cert.checks.irreducible = true;
  for (std::size_t i = 0; i < n; ++i)
    if (cert.gram[i][i] != 1) {
      cert.checks.irreducible = false;
      fail("irreducible", i, i, 1, static_cast<std::int64_t>(cert.gram[i][i]));
    }
  cert.checks.distinct = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (cert.gram[i][j] != 0) {
        cert.checks.distinct = false;
        fail("distinct", i, j, 0, static_cast<std::int64_t>(cert.gram[i][j]));
      }
  cert.checks.multiplicities = true;
  for (std::size_t i = 0; i < n; ++i)
    if (cert.target_products[i] != cert.constituents[i].multiplicity || cert.constituents[i].multiplicity == 0) {
      cert.checks.multiplicities = false;
      fail("multiplicities", i, i, static_cast<std::int64_t>(cert.constituents[i].multiplicity),
           static_cast<std::int64_t>(cert.target_products[i]));
    }
  std::uint64_t deg = 0, squares = 0;
  for (const auto& c : cert.constituents) {
    deg += c.multiplicity * c.descriptor.degree();
    squares += c.multiplicity * c.multiplicity;
  }
  cert.checks.degree = deg == target.degree();
  if (!cert.checks.degree)
    fail("degree", 0, 0, static_cast<std::int64_t>(target.degree()), static_cast<std::int64_t>(deg));
  cert.checks.frobenius = squares == cert.target_norm;
  if (!cert.checks.frobenius)
    fail("frobenius", 0, 0, static_cast<std::int64_t>(cert.target_norm), static_cast<std::int64_t>(squares));

  if (cert.checks.all()) res.certificate = std::move(cert);
  return res;
}

Element WreathStructure::embed(const Element& x, std::size_t copy, std::size_t ngens) const {
  Element out(ngens);
  const std::size_t n0 = base_ngens();
  for (std::size_t k = 0; k < n0; ++k) out[1 + copy * n0 + k] = x[k];
  return out;
}

Element WreathStructure::project(const Element& x, std::size_t copy) const {
  const std::size_t n0 = base_ngens();
  Element out(n0);
  for (std::size_t k = 0; k < n0; ++k) out[k] = x[1 + copy * n0 + k];
  return out;
}

namespace {

EtaResult finish(const MonomialDescriptor& target, std::vector<Constituent> candidates, int tier) {
  auto res = certify_decomposition(target, std::move(candidates));
  if (!res.ok()) {
    std::string msg = "tier " + std::to_string(tier) + " candidates failed certification:";
    for (const auto& f : res.failures) msg += " " + f.message() + ";";
    throw CertificationError(msg);
  }
  EtaResult out;
  out.count = res.certificate->eta();
  out.tier = tier;
  out.certificate = std::move(*res.certificate);
  return out;
}

std::optional<EtaResult> tier_abelian(const LinearCharacter& theta, const Subgroup& k, const EtaHints& hints,
                                      const MonomialDescriptor& target) {
  const Subgroup& h = theta.domain();
  std::optional<Subgroup> a;
  auto usable = [&](const Subgroup& c) {
    return h.is_subgroup_of(c) && c.is_subgroup_of(k) && c.is_abelian() && is_normal(k, c);
  };
  if (hints.abelian_normal && usable(*hints.abelian_normal)) a = hints.abelian_normal;
  if (!a && hints.search_abelian) {
    Subgroup c = normal_closure(k, h);
    if (usable(c)) a = std::move(c);
  }
  if (!a) return std::nullopt;

  const auto fiber = extension_fiber(theta, *a);
  std::unordered_set<LinearCharacter, LinearCharacterHash> covered;
  std::vector<Constituent> candidates;
  for (const auto& lam : fiber) {
    if (covered.count(lam)) continue;
    const auto orbit = orbit_stabilizer(lam, k);
    if (!(orbit.stabilizer == *a)) return std::nullopt;  // Λ^K would be reducible
    for (const auto& mem : orbit.members) covered.insert(mem);
    MonomialDescriptor d{k, lam};
    const auto mult = mackey_inner_product(target, d);
    candidates.push_back({std::move(d), mult});
  }
  return finish(target, std::move(candidates), 1);
}

std::optional<EtaResult> tier_wreath(const LinearCharacter& theta, const Subgroup& k, const EtaHints& hints,
                                     const MonomialDescriptor& target) {
  if (!hints.wreath) return std::nullopt;
  const WreathStructure& w = *hints.wreath;
  const GroupPtr& gp = k.group_ptr();
  const PcGroup& G = *gp;
  const std::size_t n = G.ngens();
  const std::size_t n0 = w.base_ngens();
  if (n != 1 + w.copies * n0 || k.rank() != n) return std::nullopt;
  const Subgroup& h = theta.domain();
  for (const auto& x : h.igs())
    if (x[0] != 0) return std::nullopt;

  std::vector<Element> other;
  for (std::size_t c = 1; c < w.copies; ++c)
    for (std::size_t i = 0; i < n0; ++i) other.push_back(G.generator(1 + c * n0 + i));
  auto lift_subgroup = [&](const Subgroup& b0) {
    std::vector<Element> gens = other;
    for (const auto& x : b0.igs()) gens.push_back(w.embed(x, 0, n));
    return Subgroup::generated_by(gp, gens);
  };
  auto lift_character = [&](const LinearCharacter& mu0) {
    Subgroup b = lift_subgroup(mu0.domain());
    std::vector<std::int64_t> a;
    for (const auto& x : b.igs()) a.push_back(mu0.evaluate(w.project(x, 0)));
    return LinearCharacter::trusted(std::move(b), std::move(a), mu0.value_order());
  };

  std::vector<Element> proj;
  for (const auto& x : h.igs()) proj.push_back(w.project(x, 0));
  const Subgroup h0 = Subgroup::generated_by(w.base_group, proj);
  if (!(lift_subgroup(h0) == h)) return std::nullopt;
  std::vector<std::int64_t> a0;
  for (const auto& x : h0.igs()) a0.push_back(theta.evaluate(w.embed(x, 0, n)));
  const auto theta0 = LinearCharacter::trusted(h0, std::move(a0), theta.value_order());
  if (!(lift_character(theta0) == theta)) return std::nullopt;

  const Subgroup g0 = Subgroup::full(w.base_group);
  const EtaHints base_hints = w.base_hints ? *w.base_hints : EtaHints{};
  const EtaResult base = eta(theta0, g0, base_hints);
  const MonomialDescriptor one0{g0, LinearCharacter::principal(g0)};

  std::vector<Constituent> candidates;
  for (const auto& c : base.certificate.constituents) {
    if (mackey_inner_product(c.descriptor, one0) == 1) {
      // 1_{G0} x ... x 1_{G0} is K-invariant and extends; its induction
      // splits into the p characters of K/N.
      std::vector<Element> gens{G.generator(0)};
      for (std::size_t i = 1; i < n; ++i) gens.push_back(G.generator(i));
      for (std::size_t e = 0; e < G.prime(); ++e) {
        std::vector<std::int64_t> vals(n, 0);
        vals[0] = static_cast<std::int64_t>(e);
        candidates.push_back({{k, LinearCharacter::from_generators(k, gens, vals, G.prime())}, c.multiplicity});
      }
    } else {
      candidates.push_back({{k, lift_character(c.descriptor.character)}, c.multiplicity});
    }
  }
  return finish(target, std::move(candidates), 2);
}

std::optional<EtaResult> tier_oracle(const Subgroup& k, const EtaHints& hints, const MonomialDescriptor& target) {
  if (k.order_log() > 63 || k.order() > hints.oracle_bound) return std::nullopt;
  std::shared_ptr<const IrrTable> table = hints.irr;
  if (!table || !(table->group == k)) table = std::make_shared<IrrTable>(irr_exhaustive(k, hints.oracle_bound));
  return finish(target, decompose_against_irr(target, *table), 3);
}

}  // namespace

EtaResult eta(const LinearCharacter& theta, const Subgroup& ambient, const EtaHints& hints) {
  const Subgroup& h = theta.domain();
  if (!h.is_subgroup_of(ambient)) throw PreconditionError("eta: H is not contained in the ambient group");
  const MonomialDescriptor target{ambient, theta};
  if (h == ambient) return finish(target, {{target, 1}}, 0);
  if (hints.tiers & kTierAbelian)
    if (auto r = tier_abelian(theta, ambient, hints, target)) return std::move(*r);
  if (hints.tiers & kTierWreath)
    if (auto r = tier_wreath(theta, ambient, hints, target)) return std::move(*r);
  if (hints.tiers & kTierOracle)
    if (auto r = tier_oracle(ambient, hints, target)) return std::move(*r);
  throw NoStrategyError("no decomposition tier applies (no abelian normal overgroup, no wreath structure, |K| = p^" +
                        std::to_string(ambient.order_log()) + " above the oracle bound)");
}

CentralSplit central_extension_split(const LinearCharacter& theta, const Subgroup& z1, const Subgroup& ambient,
                                     const EtaHints& hints) {
  const PcGroup& G = ambient.group();
  const Subgroup& h = theta.domain();
  if (!z1.is_subgroup_of(ambient) || !h.is_subgroup_of(ambient))
    throw PreconditionError("central_extension_split: subgroups must lie in the ambient group");
  for (const auto& z : z1.igs())
    for (const auto& g : ambient.igs())
      if (!G.commutator(z, g).is_identity()) throw PreconditionError("central_extension_split: Z1 is not central");
  const Subgroup hz = join(h, z1);
  if (hz.order_log() != h.order_log() + 1) throw PreconditionError("central_extension_split: |H Z1 : H| != p");

  CentralSplit out;
  out.extensions = extension_fiber(theta, hz);
  out.eta_theta = eta(theta, ambient, hints).count;
  for (const auto& nu : out.extensions) {
    out.extension_etas.push_back(eta(nu, ambient, hints).count);
    out.sum += out.extension_etas.back();
  }
  return out;
}

}  // namespace pchar
