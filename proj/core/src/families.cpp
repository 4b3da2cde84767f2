#include "pchar/families.hpp"

#include <algorithm>
#include <set>

#include "pchar/arith.hpp"
#include "pchar/error.hpp"
#include "pchar/oracle.hpp"

namespace pchar {
namespace {

Element word(std::size_t n, std::initializer_list<std::pair<std::size_t, unsigned>> letters) {
  Element x(n);
  for (auto [i, e] : letters) x[i] = static_cast<Exponent>(e);
  return x;
}

Subgroup span_of(const GroupPtr& g, std::initializer_list<std::size_t> gens) {
  std::vector<Element> xs;
  for (auto i : gens) xs.push_back(g->generator(i));
  return Subgroup::generated_by(g, xs);
}

}  // namespace

FamilyInstance family_a(unsigned p) {
  if (p < 3 || !is_prime(p)) throw HypothesisError("family a needs an odd prime, got " + std::to_string(p));
  auto pres = PcPresentation::elementary_abelian(p, 4, {"c", "a", "b", "z"});
  pres.set_conjugate(1, 0, word(4, {{1, 1}, {2, 1}}));  // a^c = a b
  pres.set_conjugate(2, 0, word(4, {{2, 1}, {3, 1}}));  // b^c = b z

  FamilyInstance f;
  f.family = "a";
  f.prime = p;
  f.group = PcGroup::create(std::move(pres));
  f.whole = Subgroup::full(f.group);
  f.h = span_of(f.group, {1, 3});
  f.lambda = LinearCharacter::make(f.h, {0, 1}, p);
  f.subgroups["A"] = span_of(f.group, {1, 2, 3});
  f.subgroups["Z"] = span_of(f.group, {3});
  f.subgroups["H"] = f.h;
  f.elements["c"] = f.group->generator(0);
  f.index_log = 2;

  // Λ_r and Λ_{1-r} are conjugate; 2r ≡ 1 is the self-paired class.
  const auto P = static_cast<std::int64_t>(p);
  for (std::int64_t r = 0; r < P; ++r) {
    const std::int64_t partner = mod(1 - r, P);
    if (partner < r) continue;
    f.predicted.push_back({{f.whole, family_a_lambda_r(f, r)}, partner == r ? 1u : 2u});
  }
  f.predicted_eta = f.predicted.size();

  auto hints = std::make_shared<EtaHints>();
  hints->abelian_normal = f.subgroups["A"];
  // The oracle stays usable on family a up to p = 5.
  hints->oracle_bound = std::max<std::uint64_t>(kDefaultOracleBound, std::min<std::uint64_t>(ipow(p, 4), 625));
  f.hints = hints;
  return f;
}

LinearCharacter family_a_lambda_r(const FamilyInstance& fa, std::int64_t r) {
  return LinearCharacter::make(fa.subgroups.at("A"), {0, mod(r, fa.prime), 1}, fa.prime);
}

FamilyInstance family_b(unsigned p, std::optional<std::int64_t> r_override) {
  if (!is_prime(p) || p <= 5 || (p - 1) % 3 != 0)
    throw HypothesisError("family b needs a prime p > 5 with 3 | p-1, got " + std::to_string(p));
  const auto P = static_cast<std::int64_t>(p);
  const std::int64_t r_canon = mod(-inverse_mod(3, P), P);
  const std::int64_t r = r_override ? mod(*r_override, P) : r_canon;
  if (mod(3 * r + 1, P) != 0) throw HypothesisError("r must satisfy 3r = -1 (mod p)");

  // u1 = 1+x and u2 = 1+x^2 act on m_k = m(x^k) by m(y)^u = m(yu).
  auto pres = PcPresentation::elementary_abelian(p, 6, {"u1", "u2", "m0", "m1", "m2", "m3"});
  for (std::size_t k = 0; k < 3; ++k) pres.set_conjugate(2 + k, 0, word(6, {{2 + k, 1}, {3 + k, 1}}));
  for (std::size_t k = 0; k < 2; ++k) pres.set_conjugate(2 + k, 1, word(6, {{2 + k, 1}, {4 + k, 1}}));

  FamilyInstance f;
  f.family = "b";
  f.prime = p;
  f.r = r;
  f.group = PcGroup::create(std::move(pres));
  f.whole = Subgroup::full(f.group);
  f.h = span_of(f.group, {2, 3, 5});
  f.lambda = LinearCharacter::make(f.h, {r, r, 1}, p);
  f.subgroups["M"] = span_of(f.group, {2, 3, 4, 5});
  f.subgroups["U"] = span_of(f.group, {0, 1});
  f.subgroups["Z"] = span_of(f.group, {5});
  f.subgroups["H"] = f.h;
  f.elements["u1"] = f.group->generator(0);
  f.elements["u2"] = f.group->generator(1);
  f.index_log = 3;

  // One constituent per value e = r(1 - i^3): μ_{r,r,i} for the least i.
  std::set<std::int64_t> seen;
  for (std::int64_t i = 0; i < P; ++i) {
    const std::int64_t e = mod(r * (1 - i * i * i), P);
    if (!seen.insert(e).second) continue;
    f.predicted.push_back({{f.whole, family_b_mu(f, r, r, i)}, i == 0 ? 1u : 3u});
  }
  f.predicted_eta = f.predicted.size();

  auto hints = std::make_shared<EtaHints>();
  hints->abelian_normal = f.subgroups["M"];
  f.hints = hints;
  return f;
}

LinearCharacter family_b_mu(const FamilyInstance& fb, std::int64_t f0, std::int64_t f1, std::int64_t f2) {
  const auto P = static_cast<std::int64_t>(fb.prime);
  return LinearCharacter::make(fb.subgroups.at("M"), {mod(f0, P), mod(f1, P), mod(f2, P), 1}, fb.prime);
}

PcPresentation wreath_presentation(const PcPresentation& base) {
  const unsigned p = base.prime;
  const std::size_t n0 = base.ngens;
  const std::size_t n = 1 + p * n0;
  std::vector<std::string> names{"t"};
  for (std::size_t c = 0; c < p; ++c)
    for (std::size_t i = 0; i < n0; ++i) names.push_back(base.name(i) + "_" + std::to_string(c));
  auto pres = PcPresentation::elementary_abelian(p, n, names);
  auto embed = [&](const Element& x, std::size_t c) {
    Element y(n);
    for (std::size_t k = 0; k < n0; ++k) y[1 + c * n0 + k] = x[k];
    return y;
  };
  for (std::size_t c = 0; c < p; ++c) {
    for (std::size_t i = 0; i < n0; ++i) {
      const std::size_t gi = 1 + c * n0 + i;
      pres.set_power(gi, embed(base.powers[i], c));
      for (std::size_t j = i + 1; j < n0; ++j) pres.set_conjugate(1 + c * n0 + j, gi, embed(base.conjugates[j][i], c));
      pres.set_conjugate(gi, 0, pres.unit(1 + ((c + 1) % p) * n0 + i));
    }
  }
  return pres;
}

FamilyInstance wreath_lift(const FamilyInstance& base) {
  const unsigned p = base.prime;
  const MonomialDescriptor base_target{base.whole, base.lambda};
  const MonomialDescriptor one{base.whole, LinearCharacter::principal(base.whole)};
  if (mackey_inner_product(base_target, one) != 0)
    throw PreconditionError("wreath_lift needs [lambda^G0, 1] = 0");

  auto base_ptr = std::make_shared<const FamilyInstance>(base);
  WreathStructure ws{base.group, base.hints, p};

  FamilyInstance f;
  f.family = "wreath(" + base.family + ")";
  f.prime = p;
  f.group = PcGroup::create(wreath_presentation(base.group->presentation()));
  f.whole = Subgroup::full(f.group);
  const std::size_t n = f.group->ngens();
  const std::size_t n0 = base.group->ngens();

  std::vector<Element> others, n_gens;
  for (std::size_t c = 0; c < p; ++c)
    for (std::size_t i = 0; i < n0; ++i) {
      n_gens.push_back(f.group->generator(1 + c * n0 + i));
      if (c > 0) others.push_back(n_gens.back());
    }
  auto lift = [&](const LinearCharacter& mu0) {
    std::vector<Element> gens = others;
    for (const auto& x : mu0.domain().igs()) gens.push_back(ws.embed(x, 0, n));
    Subgroup b = Subgroup::generated_by(f.group, gens);
    std::vector<std::int64_t> a;
    for (const auto& x : b.igs()) a.push_back(mu0.evaluate(ws.project(x, 0)));
    return LinearCharacter::make(std::move(b), std::move(a), mu0.value_order());
  };

  f.lambda = lift(base.lambda);
  f.h = f.lambda.domain();
  f.subgroups["H"] = f.h;
  f.subgroups["N"] = Subgroup::generated_by(f.group, n_gens);
  f.elements["t"] = f.group->generator(0);
  f.index_log = base.index_log + 1;
  for (const auto& c : base.predicted) f.predicted.push_back({{f.whole, lift(c.descriptor.character)}, c.multiplicity});
  f.predicted_eta = base.predicted_eta;
  f.iterate = base.iterate + 1;
  f.base = base_ptr;

  auto hints = std::make_shared<EtaHints>();
  hints->wreath = ws;
  hints->search_abelian = false;
  f.hints = hints;
  return f;
}

FamilyInstance wreath_iterate(const FamilyInstance& base, std::size_t times) {
  FamilyInstance f = base;
  for (std::size_t k = 0; k < times; ++k) f = wreath_lift(f);
  return f;
}

namespace {
void check_cubic(std::int64_t r, unsigned p) {
  if (!is_prime(p) || (p - 1) % 3 != 0) throw HypothesisError("cubic sets need a prime p with 3 | p-1");
  if (mod(r, p) == 0) throw HypothesisError("r must be nonzero mod p");
}
}  // namespace

std::vector<std::int64_t> cubic_value_set(std::int64_t r, unsigned p) {
  check_cubic(r, p);
  const auto P = static_cast<std::int64_t>(p);
  std::set<std::int64_t> s;
  for (std::int64_t i = 0; i < P; ++i) s.insert(mod(r * (1 - mod(i * i * i, P)), P));
  return {s.begin(), s.end()};
}

std::vector<std::int64_t> cubic_values_nonzero_i(std::int64_t r, unsigned p) {
  check_cubic(r, p);
  const auto P = static_cast<std::int64_t>(p);
  std::vector<std::int64_t> out;
  for (std::int64_t i = 1; i < P; ++i) {
    const std::int64_t e = mod(r * (1 - mod(i * i * i, P)), P);
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  }
  return out;
}

std::vector<std::int64_t> cubic_solutions(std::int64_t e, std::int64_t r, unsigned p) {
  check_cubic(r, p);
  const auto P = static_cast<std::int64_t>(p);
  std::vector<std::int64_t> out;
  for (std::int64_t x = 1; x < P; ++x)
    if (mod(r * (1 - mod(x * x * x, P)) - e, P) == 0) out.push_back(x);
  return out;
}

std::size_t cubic_solution_count(std::int64_t e, std::int64_t r, unsigned p) {
  return cubic_solutions(e, r, p).size();
}

}  // namespace pchar
