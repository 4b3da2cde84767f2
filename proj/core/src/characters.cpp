#include "pchar/characters.hpp"

#include <algorithm>
#include <unordered_set>

#include "pchar/arith.hpp"
#include "pchar/error.hpp"
#include "pchar/orbit.hpp"

namespace pchar {
namespace {

using Form = std::vector<std::int64_t>;

bool is_power_of(std::uint64_t m, unsigned p) {
  if (m == 0) return false;
  while (m % p == 0) m /= p;
  return m == 1;
}

unsigned log_p(std::uint64_t m, unsigned p) {
  unsigned e = 0;
  while (m > 1) {
    m /= p;
    ++e;
  }
  return e;
}

// Homogeneous relations among the igs values of B, as rows over Z/m.
std::vector<Form> relation_rows(const Subgroup& b, std::int64_t m) {
  std::vector<Form> forms(b.rank(), Form(b.rank(), 0));
  for (std::size_t k = 0; k < b.rank(); ++k) forms[k][k] = 1;
  return symbolic_closure(b.group_ptr(), b.igs(), forms, m).constraints;
}

std::string format_form(const Form& f) {
  std::string s;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] == 0) continue;
    if (!s.empty()) s += " + ";
    s += std::to_string(f[k]) + "*h" + std::to_string(k + 1);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

LinearCharacter::LinearCharacter(Subgroup domain, std::vector<std::int64_t> a, std::uint64_t m)
    : domain_(std::move(domain)), a_(std::move(a)), m_(m) {
  normalize();
}

void LinearCharacter::normalize() {
  const unsigned p = domain_.group().prime();
  const auto m = static_cast<std::int64_t>(m_);
  for (auto& v : a_) v = mod(v, m);
  while (m_ > 1 && std::all_of(a_.begin(), a_.end(), [&](std::int64_t v) { return v % p == 0; })) {
    for (auto& v : a_) v /= p;
    m_ /= p;
  }
}

LinearCharacter LinearCharacter::trusted(Subgroup domain, std::vector<std::int64_t> igs_exponents,
                                         std::uint64_t value_order) {
  return LinearCharacter(std::move(domain), std::move(igs_exponents), value_order);
}

LinearCharacter LinearCharacter::make(Subgroup domain, std::vector<std::int64_t> igs_exponents,
                                      std::uint64_t value_order) {
  const unsigned p = domain.group().prime();
  if (!is_power_of(value_order, p) || value_order > (1u << 30))
    throw PreconditionError("value order must be a power of p below 2^30");
  if (igs_exponents.size() != domain.rank())
    throw PreconditionError("expected one exponent per igs member (" + std::to_string(domain.rank()) + ")");
  const auto m = static_cast<std::int64_t>(value_order);
  for (const auto& row : relation_rows(domain, m)) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < row.size(); ++k) s = mod(s + row[k] * mod(igs_exponents[k], m), m);
    if (s != 0) throw NotAHomomorphism("assignment violates relation " + format_form(row) + " = 0 (mod " +
                                       std::to_string(m) + ")");
  }
  return LinearCharacter(std::move(domain), std::move(igs_exponents), value_order);
}

LinearCharacter LinearCharacter::from_generators(Subgroup domain, std::span<const Element> gens,
                                                 std::span<const std::int64_t> exponents,
                                                 std::uint64_t value_order) {
  const unsigned p = domain.group().prime();
  if (!is_power_of(value_order, p) || value_order > (1u << 30))
    throw PreconditionError("value order must be a power of p below 2^30");
  if (gens.size() != exponents.size()) throw PreconditionError("one exponent per generator required");
  const auto m = static_cast<std::int64_t>(value_order);
  std::vector<Form> forms;
  for (auto e : exponents) forms.push_back({mod(e, m)});
  auto sc = symbolic_closure(domain.group_ptr(), gens, forms, m);
  if (!(sc.subgroup == domain)) throw PreconditionError("generators do not generate the domain");
  if (!sc.constraints.empty())
    throw NotAHomomorphism("assignment violates a relation: residual exponent " +
                           std::to_string(sc.constraints.front()[0]) + " (mod " + std::to_string(m) + ")");
  std::vector<std::int64_t> a;
  for (const auto& f : sc.igs_forms) a.push_back(f[0]);
  return LinearCharacter(std::move(domain), std::move(a), value_order);
}

LinearCharacter LinearCharacter::principal(Subgroup domain) {
  const std::size_t r = domain.rank();
  return LinearCharacter(std::move(domain), std::vector<std::int64_t>(r, 0), 1);
}

std::optional<std::int64_t> LinearCharacter::try_eval(const Element& x) const {
  const auto a = domain_.decompose(x);
  if (!a) return std::nullopt;
  const auto m = static_cast<std::int64_t>(m_);
  std::int64_t s = 0;
  for (std::size_t k = 0; k < a_.size(); ++k) s = mod(s + static_cast<std::int64_t>((*a)[k]) * a_[k], m);
  return s;
}

std::int64_t LinearCharacter::evaluate(const Element& x) const {
  auto v = try_eval(x);
  if (!v) throw PreconditionError("element outside the character's domain");
  return *v;
}

std::int64_t LinearCharacter::evaluate_scaled(const Element& x, std::uint64_t modulus) const {
  return evaluate(x) * static_cast<std::int64_t>(modulus / m_);
}

LinearCharacter LinearCharacter::restrict_to(const Subgroup& sub) const {
  if (!sub.is_subgroup_of(domain_)) throw PreconditionError("restriction to a non-subgroup");
  std::vector<std::int64_t> a;
  for (const auto& h : sub.igs()) a.push_back(evaluate(h));
  return LinearCharacter(sub, std::move(a), m_);
}

bool LinearCharacter::operator<(const LinearCharacter& o) const {
  if (!(domain_ == o.domain_)) return domain_ < o.domain_;
  if (m_ != o.m_) return m_ < o.m_;
  return a_ < o.a_;
}

std::string LinearCharacter::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < a_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(a_[k]);
  }
  return s + "] mod " + std::to_string(m_);
}

std::size_t LinearCharacterHash::operator()(const LinearCharacter& c) const noexcept {
  std::size_t h = c.value_order();
  for (auto v : c.exponents()) h = h * 1000003u ^ static_cast<std::size_t>(v);
  return h;
}

bool same_value(const LinearCharacter& c1, const Element& x, const LinearCharacter& c2, const Element& y) {
  const std::uint64_t m = std::max(c1.value_order(), c2.value_order());
  return c1.evaluate_scaled(x, m) == c2.evaluate_scaled(y, m);
}

std::uint64_t abelianization_exponent(const Subgroup& b) {
  const PcGroup& G = b.group();
  const Subgroup d = derived_subgroup(b);
  std::uint64_t best = 1;
  for (const auto& h : b.igs()) {
    std::uint64_t o = 1;
    for (Element y = h; !d.contains(y); y = G.power(y, G.prime())) o *= G.prime();
    best = std::max(best, o);
  }
  return best;
}

LinearCharacter conjugate_character(const LinearCharacter& mu, const Element& g) {
  const PcGroup& G = mu.domain().group();
  const Element ginv = G.inverse(g);
  Subgroup target = conjugate_subgroup(mu.domain(), g);
  std::vector<std::int64_t> a;
  for (const auto& x : target.igs()) a.push_back(mu.evaluate(G.conjugate(x, ginv)));
  return LinearCharacter::trusted(std::move(target), std::move(a), mu.value_order());
}

std::vector<std::vector<std::int64_t>> solve_mod_prime_power(std::vector<std::vector<std::int64_t>> rows,
                                                             std::size_t k, unsigned p, std::int64_t m,
                                                             std::size_t bound) {
  using I = std::int64_t;
  for (auto& row : rows) {
    if (row.size() != k + 1) throw PreconditionError("solver rows must have k+1 entries");
    for (auto& v : row) v = mod(v, m);
  }
  auto valuation = [p](I a) {
    unsigned v = 0;
    while (a % p == 0) {
      a /= p;
      ++v;
    }
    return v;
  };
  std::vector<std::vector<I>> V(k, std::vector<I>(k, 0));
  for (std::size_t j = 0; j < k; ++j) V[j][j] = 1;
  std::vector<unsigned> diag;

  // Smith-style reduction over the chain ring Z/p^e: the pivot of least
  // valuation divides everything in its row and column.
  const std::size_t r = rows.size();
  for (std::size_t t = 0; t < std::min(r, k); ++t) {
    std::size_t bi = r, bj = k;
    unsigned bv = ~0u;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < k; ++j)
        if (rows[i][j] != 0) {
          const unsigned v = valuation(rows[i][j]);
          if (v < bv) {
            bv = v;
            bi = i;
            bj = j;
          }
        }
    if (bi == r) break;
    std::swap(rows[t], rows[bi]);
    if (bj != t) {
      for (auto& row : rows) std::swap(row[t], row[bj]);
      for (auto& vrow : V) std::swap(vrow[t], vrow[bj]);
    }
    const I pv = static_cast<I>(ipow(p, bv));
    const I uinv = inverse_mod(rows[t][t] / pv, m);
    for (auto& x : rows[t]) x = mod(x * uinv, m);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == t || rows[i][t] == 0) continue;
      const I f = rows[i][t] / pv;
      for (std::size_t c = 0; c <= k; ++c) rows[i][c] = mod(rows[i][c] - f * rows[t][c], m);
    }
    for (std::size_t j = t + 1; j < k; ++j) {
      if (rows[t][j] == 0) continue;
      const I f = rows[t][j] / pv;
      rows[t][j] = 0;
      for (auto& vrow : V) vrow[j] = mod(vrow[j] - f * vrow[t], m);
    }
    diag.push_back(bv);
  }
  const std::size_t rank = diag.size();
  for (std::size_t i = rank; i < r; ++i)
    if (rows[i][k] != 0) return {};

  std::vector<I> base(k, 0), step(k, 1);
  std::vector<std::uint64_t> choices(k, static_cast<std::uint64_t>(m));
  for (std::size_t i = 0; i < rank; ++i) {
    const I pv = static_cast<I>(ipow(p, diag[i]));
    if (rows[i][k] % pv != 0) return {};
    base[i] = rows[i][k] / pv;
    step[i] = m / pv;
    choices[i] = static_cast<std::uint64_t>(pv);
  }
  std::uint64_t total = 1;
  for (auto c : choices) {
    total *= c;
    if (total > bound) throw SizeGuardError("solution count exceeds bound " + std::to_string(bound));
  }

  std::vector<std::vector<I>> out;
  out.reserve(total);
  std::vector<std::uint64_t> idx(k, 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    std::vector<I> y(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
      const I z = mod(base[j] + static_cast<I>(idx[j]) * step[j], m);
      if (z == 0) continue;
      for (std::size_t i = 0; i < k; ++i) y[i] = mod(y[i] + V[i][j] * z, m);
    }
    out.push_back(std::move(y));
    for (std::size_t j = k; j-- > 0;) {
      if (++idx[j] < choices[j]) break;
      idx[j] = 0;
    }
  }
  return out;
}

std::vector<LinearCharacter> lin_all(const Subgroup& b, std::size_t bound) {
  const unsigned p = b.group().prime();
  const auto m = static_cast<std::int64_t>(abelianization_exponent(b));
  auto rows = relation_rows(b, m);
  for (auto& row : rows) row.push_back(0);
  std::vector<LinearCharacter> out;
  for (auto& y : solve_mod_prime_power(std::move(rows), b.rank(), p, m, bound))
    out.push_back(LinearCharacter::trusted(b, std::move(y), static_cast<std::uint64_t>(m)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LinearCharacter> enumerate_extensions(const LinearCharacter& mu, const Subgroup& over,
                                                  std::size_t bound) {
  const Subgroup& h = mu.domain();
  if (!h.is_subgroup_of(over)) throw PreconditionError("extension target does not contain the domain");
  const unsigned p = over.group().prime();
  const auto m = static_cast<std::int64_t>(std::max(abelianization_exponent(over), mu.value_order()));
  auto rows = relation_rows(over, m);
  for (auto& row : rows) row.push_back(0);
  for (std::size_t k = 0; k < h.rank(); ++k) {
    const auto a = over.decompose(h.igs()[k]);
    Form row(over.rank() + 1, 0);
    for (std::size_t j = 0; j < over.rank(); ++j) row[j] = (*a)[j];
    row.back() = mu.evaluate_scaled(h.igs()[k], static_cast<std::uint64_t>(m));
    rows.push_back(std::move(row));
  }
  std::vector<LinearCharacter> out;
  for (auto& y : solve_mod_prime_power(std::move(rows), over.rank(), p, m, bound))
    out.push_back(LinearCharacter::trusted(over, std::move(y), static_cast<std::uint64_t>(m)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LinearCharacter> extension_fiber(const LinearCharacter& mu, const Subgroup& a) {
  const Subgroup& h = mu.domain();
  if (!h.is_subgroup_of(a)) throw PreconditionError("extension_fiber: domain is not contained in A");
  bool supported = a.is_abelian();
  if (!supported && a.order_log() == h.order_log() + 1) {
    try {
      supported = !center(a).is_subgroup_of(h);
    } catch (const SizeGuardError&) {
      supported = false;
    }
  }
  if (!supported) throw UnsupportedOvergroup("extension_fiber needs A abelian or A = H Z with Z central, |A:H| = p");
  auto out = enumerate_extensions(mu, a);
  const std::uint64_t expected = ipow(a.group().prime(), static_cast<unsigned>(a.order_log() - h.order_log()));
  if (out.size() != expected)
    throw Error("extension fiber has " + std::to_string(out.size()) + " members, expected " + std::to_string(expected));
  return out;
}

CharacterOrbit orbit_stabilizer(const LinearCharacter& mu, const Subgroup& ambient, std::size_t bound) {
  const Subgroup& b = mu.domain();
  if (!is_normal(ambient, b)) throw PreconditionError("orbit_stabilizer: domain is not normal in the ambient group");
  const PcGroup& G = ambient.group();
  // The action on igs exponent vectors is linear: precompute, per ambient
  // generator g, the decomposition of g h_k g^{-1} over the domain igs.
  std::vector<std::vector<std::vector<unsigned>>> action;
  for (const auto& g : ambient.igs()) {
    const Element ginv = G.inverse(g);
    std::vector<std::vector<unsigned>> mat;
    for (const auto& x : b.igs()) mat.push_back(*b.decompose(G.conjugate(x, ginv)));
    action.push_back(std::move(mat));
  }
  auto act = [&](const LinearCharacter& c, std::size_t k) {
    const auto m = static_cast<std::int64_t>(c.value_order());
    std::vector<std::int64_t> a(b.rank(), 0);
    for (std::size_t i = 0; i < b.rank(); ++i)
      for (std::size_t j = 0; j < b.rank(); ++j) a[i] = mod(a[i] + action[k][i][j] * c.exponents()[j], m);
    return LinearCharacter::trusted(b, std::move(a), c.value_order());
  };
  auto orbit = pc_orbit_stabilizer<LinearCharacter, LinearCharacterHash>(G, ambient.igs(), mu, act, bound);
  CharacterOrbit out;
  out.representative = mu;
  out.members = std::move(orbit.points);
  out.transversal = std::move(orbit.transversal);
  out.stabilizer = Subgroup::generated_by(ambient.group_ptr(), orbit.stabilizer_gens);
  return out;
}

std::uint64_t MonomialDescriptor::degree() const {
  return ipow(ambient.group().prime(), static_cast<unsigned>(degree_log()));
}

bool MonomialDescriptor::operator<(const MonomialDescriptor& o) const {
  if (degree_log() != o.degree_log()) return degree_log() < o.degree_log();
  if (!(inducing() == o.inducing())) return inducing() < o.inducing();
  if (character.value_order() != o.character.value_order())
    return character.value_order() < o.character.value_order();
  return character.exponents() < o.character.exponents();
}

Rational naive_induced_inner_product(const MonomialDescriptor& d1, const MonomialDescriptor& d2,
                                     std::uint64_t bound) {
  if (!(d1.ambient == d2.ambient)) throw PreconditionError("descriptors induce to different groups");
  const Subgroup& k = d1.ambient;
  if (k.order_log() > 63 || k.order() > bound)
    throw SizeGuardError("naive inner product requires |K| <= " + std::to_string(bound));
  const PcGroup& G = k.group();
  const unsigned p = G.prime();
  const std::uint64_t m = std::max(d1.character.value_order(), d2.character.value_order());
  const unsigned e = log_p(m, p);
  const auto elems = elements(k, bound);

  auto induced_values = [&](const MonomialDescriptor& d) {
    const auto reps = left_coset_reps(k, d.inducing(), bound);
    std::vector<Element> inv;
    for (const auto& t : reps) inv.push_back(G.inverse(t));
    std::vector<Cyclotomic> vals;
    vals.reserve(elems.size());
    for (const auto& x : elems) {
      std::vector<std::int64_t> full(m, 0);
      for (std::size_t i = 0; i < reps.size(); ++i) {
        const Element y = G.multiply(G.multiply(inv[i], x), reps[i]);
        if (auto v = d.character.try_eval(y)) ++full[static_cast<std::size_t>(*v * static_cast<std::int64_t>(m / d.character.value_order()))];
      }
      Cyclotomic c(p, e);
      for (std::uint64_t j = 0; j < m; ++j)
        if (full[j] != 0) c += Cyclotomic::root(p, e, static_cast<std::int64_t>(j)) * Cyclotomic::integer(p, e, full[j]);
      vals.push_back(std::move(c));
    }
    return vals;
  };
  const auto v1 = induced_values(d1);
  const auto v2 = induced_values(d2);
  Cyclotomic total(p, e);
  for (std::size_t i = 0; i < elems.size(); ++i) total += v1[i] * v2[i].conj();
  const auto n = total.to_integer();
  if (!n) throw Error("inner product sum is not a rational integer: " + total.to_string());
  return Rational::make(*n, static_cast<std::int64_t>(k.order()));
}

}  // namespace pchar
