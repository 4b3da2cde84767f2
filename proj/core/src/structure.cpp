#include <algorithm>
#include <limits>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "pchar/error.hpp"
#include "pchar/orbit.hpp"
#include "pchar/subgroup.hpp"

namespace pchar {
namespace {

void require_same_group(const Subgroup& a, const Subgroup& b) {
  if (a.group_ptr() != b.group_ptr()) throw PreconditionError("subgroups live in different groups");
}

void guard_order(const Subgroup& k, const char* what) {
  if (k.order_log() > 63 || k.order() > kStructureOrderBound)
    throw SizeGuardError(std::string(what) + " requires |G| <= " + std::to_string(kStructureOrderBound));
}

Subgroup from_gens(const GroupPtr& g, const std::vector<Element>& gens) {
  return Subgroup::generated_by(g, gens);
}

}  // namespace

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_group(a, b);
  std::vector<Element> gens(a.igs().begin(), a.igs().end());
  gens.insert(gens.end(), b.igs().begin(), b.igs().end());
  return from_gens(a.group_ptr(), gens);
}

// B1 ∩ B2 is the stabiliser in B1 of the coset B2 under left multiplication.
Subgroup intersection(const Subgroup& b1, const Subgroup& b2) {
  require_same_group(b1, b2);
  const PcGroup& G = b1.group();
  auto act = [&](const Element& w, std::size_t k) {
    return b2.canonical_left(G.multiply(b1.inverse_power(k, 1), w));
  };
  auto orbit = pc_orbit_stabilizer<Element, ElementHash>(G, b1.igs(), G.identity(), act,
                                                         std::numeric_limits<std::size_t>::max());
  return from_gens(b1.group_ptr(), orbit.stabilizer_gens);
}

Subgroup conjugate_subgroup(const Subgroup& b, const Element& g) {
  const PcGroup& G = b.group();
  std::vector<Element> gens;
  for (const auto& h : b.igs()) gens.push_back(G.conjugate(h, g));
  return from_gens(b.group_ptr(), gens);
}

bool is_normal(const Subgroup& ambient, const Subgroup& b) {
  require_same_group(ambient, b);
  const PcGroup& G = b.group();
  for (const auto& k : ambient.igs())
    for (const auto& h : b.igs())
      if (!b.contains(G.conjugate(h, k))) return false;
  return true;
}

Subgroup normal_closure(const Subgroup& ambient, const Subgroup& b) {
  require_same_group(ambient, b);
  const PcGroup& G = b.group();
  Subgroup n = b;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Element> extra;
    for (const auto& k : ambient.igs())
      for (const auto& h : n.igs()) {
        Element c = G.conjugate(h, k);
        if (!n.contains(c)) extra.push_back(std::move(c));
      }
    if (!extra.empty()) {
      extra.insert(extra.end(), n.igs().begin(), n.igs().end());
      n = from_gens(b.group_ptr(), extra);
      changed = true;
    }
  }
  return n;
}

Subgroup derived_subgroup(const Subgroup& b) {
  const PcGroup& G = b.group();
  std::vector<Element> comms;
  const auto igs = b.igs();
  for (std::size_t i = 0; i < igs.size(); ++i)
    for (std::size_t j = i + 1; j < igs.size(); ++j) {
      Element c = G.commutator(igs[i], igs[j]);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(b, from_gens(b.group_ptr(), comms));
}

Subgroup centralizer(const Subgroup& ambient, std::span<const Element> s) {
  guard_order(ambient, "centralizer");
  const PcGroup& G = ambient.group();
  Subgroup c = ambient;
  for (const auto& x : s) {
    auto act = [&](const Element& y, std::size_t k) { return G.conjugate(y, c.igs()[k]); };
    auto orbit = pc_orbit_stabilizer<Element, ElementHash>(G, c.igs(), x, act, kStructureOrderBound);
    c = from_gens(ambient.group_ptr(), orbit.stabilizer_gens);
  }
  return c;
}

Subgroup center(const Subgroup& ambient) {
  std::vector<Element> gens(ambient.igs().begin(), ambient.igs().end());
  return centralizer(ambient, gens);
}

Subgroup normal_core(const Subgroup& ambient, const Subgroup& b) {
  require_same_group(ambient, b);
  guard_order(ambient, "normal_core");
  Subgroup c = b;
  for (;;) {
    Subgroup d = c;
    for (const auto& k : ambient.igs()) d = intersection(d, conjugate_subgroup(d, k));
    if (d == c) return c;
    c = std::move(d);
  }
}

Subgroup normalizer(const Subgroup& ambient, const Subgroup& b) {
  require_same_group(ambient, b);
  guard_order(ambient, "normalizer");
  auto act = [&](const Subgroup& s, std::size_t k) { return conjugate_subgroup(s, ambient.igs()[k]); };
  auto orbit = pc_orbit_stabilizer<Subgroup, SubgroupHash>(ambient.group(), ambient.igs(), b, act,
                                                           kStructureOrderBound);
  auto gens = orbit.stabilizer_gens;
  gens.insert(gens.end(), b.igs().begin(), b.igs().end());
  return from_gens(ambient.group_ptr(), gens);
}

std::vector<Subgroup> subnormal_chain(const Subgroup& ambient, const Subgroup& h) {
  require_same_group(ambient, h);
  if (!h.is_subgroup_of(ambient)) throw PreconditionError("subnormal_chain: H is not contained in G");
  guard_order(ambient, "subnormal_chain");
  const PcGroup& G = ambient.group();
  std::vector<Subgroup> chain{h};
  Subgroup cur = h;
  while (!(cur == ambient)) {
    const Subgroup n = normalizer(ambient, cur);
    Element y;
    bool found = false;
    for (std::size_t k = n.rank(); k-- > 0;) {
      if (!cur.contains(n.igs()[k])) {
        y = n.igs()[k];
        found = true;
        break;
      }
    }
    if (!found) throw Error("normalizer failed to grow; group is not a p-group?");
    for (Element yp = G.power(y, G.prime()); !cur.contains(yp); yp = G.power(y, G.prime())) y = yp;
    std::vector<Element> gens(cur.igs().begin(), cur.igs().end());
    gens.push_back(y);
    cur = from_gens(ambient.group_ptr(), gens);
    chain.push_back(cur);
  }
  return chain;
}

std::vector<std::vector<Subgroup>> subgroup_lattice(const Subgroup& ambient, std::size_t max_order_log) {
  if (ambient.order_log() > max_order_log)
    throw SizeGuardError("subgroup enumeration requires |G| <= p^" + std::to_string(max_order_log));
  const PcGroup& G = ambient.group();
  const unsigned p = G.prime();
  const auto elems = elements(ambient);
  std::vector<std::vector<Subgroup>> layers{{Subgroup::trivial(ambient.group_ptr())}};
  // Every subgroup of order p^{k+1} contains a normal subgroup of order p^k,
  // so it arises as <S, x> with x normalising S and x^p in S.
  for (std::size_t k = 0; k < ambient.order_log(); ++k) {
    std::set<Subgroup> next;
    for (const auto& s : layers[k]) {
      for (const auto& x : elems) {
        if (x.is_identity() || s.canonical_left(x) != x) continue;
        if (!s.contains(G.power(x, p))) continue;
        bool normalises = true;
        for (const auto& h : s.igs())
          if (!s.contains(G.conjugate(h, x))) {
            normalises = false;
            break;
          }
        if (!normalises) continue;
        std::vector<Element> gens(s.igs().begin(), s.igs().end());
        gens.push_back(x);
        next.insert(from_gens(ambient.group_ptr(), gens));
      }
    }
    layers.emplace_back(next.begin(), next.end());
  }
  return layers;
}

std::vector<Subgroup> enumerate_subgroups(const Subgroup& ambient, std::size_t order_log,
                                          std::size_t max_order_log) {
  if (order_log > ambient.order_log()) return {};
  if (order_log == ambient.order_log()) return {ambient};
  if (order_log == 0) return {Subgroup::trivial(ambient.group_ptr())};
  return subgroup_lattice(ambient, max_order_log)[order_log];
}

std::size_t conjugacy_class_count(const Subgroup& ambient, std::uint64_t bound) {
  const PcGroup& G = ambient.group();
  const auto elems = elements(ambient, bound);
  std::unordered_set<Element, ElementHash> seen;
  std::size_t classes = 0;
  for (const auto& x : elems) {
    if (seen.count(x)) continue;
    ++classes;
    std::vector<Element> stack{x};
    seen.insert(x);
    while (!stack.empty()) {
      Element y = std::move(stack.back());
      stack.pop_back();
      for (const auto& g : ambient.igs()) {
        Element z = G.conjugate(y, g);
        if (seen.insert(z).second) stack.push_back(std::move(z));
      }
    }
  }
  return classes;
}

}  // namespace pchar
