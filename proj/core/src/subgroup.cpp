#include "pchar/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>

#include "pchar/arith.hpp"
#include "pchar/error.hpp"
#include "pchar/orbit.hpp"

namespace pchar {

using Form = std::vector<std::int64_t>;

// Non-commutative echelonisation: sift each element against the table,
// insert what survives, and queue its p-th power and its commutators with
// the existing members until everything sifts to the identity.
class IgsBuilder {
 public:
  IgsBuilder(GroupPtr group, std::size_t width, std::int64_t modulus)
      : group_(std::move(group)), width_(width), modulus_(modulus), table_(group_->ngens()) {}

  void add(Element x, Form f) {
    queue_.emplace_back(std::move(x), std::move(f));
    while (!queue_.empty()) {
      auto [y, g] = std::move(queue_.front());
      queue_.pop_front();
      sift_insert(std::move(y), std::move(g));
    }
  }

  SymbolicClosure finish() {
    const PcGroup& G = *group_;
    std::vector<std::size_t> depths;
    for (std::size_t d = 0; d < table_.size(); ++d)
      if (table_[d]) depths.push_back(d);
    // Reduce from the deepest member upwards so that each member is cleared
    // at the depths of already-reduced deeper members.
    for (std::size_t a = depths.size(); a-- > 0;) {
      Entry& ent = *table_[depths[a]];
      for (std::size_t b = a + 1; b < depths.size(); ++b) {
        const std::size_t d = depths[b];
        const unsigned e = ent.x[d];
        if (e == 0) continue;
        const Entry& deeper = *table_[d];
        ent.x = G.multiply(ent.x, deeper.inv_pows[e - 1]);
        axpy(ent.f, -static_cast<std::int64_t>(e), deeper.f);
      }
      ent.inv_pows = inverse_powers(ent.x);
    }
    SymbolicClosure out;
    std::vector<Element> igs;
    for (std::size_t d : depths) {
      igs.push_back(table_[d]->x);
      out.igs_forms.push_back(table_[d]->f);
    }
    out.subgroup = Subgroup(group_, std::move(igs));
    std::sort(constraints_.begin(), constraints_.end());
    constraints_.erase(std::unique(constraints_.begin(), constraints_.end()), constraints_.end());
    out.constraints = std::move(constraints_);
    return out;
  }

 private:
  struct Entry {
    Element x;
    Form f;
    std::vector<Element> inv_pows;
  };

  void axpy(Form& y, std::int64_t a, const Form& x) const {
    for (std::size_t k = 0; k < width_; ++k) y[k] = mod(y[k] + a * x[k], modulus_);
  }

  std::vector<Element> inverse_powers(const Element& x) const {
    const PcGroup& G = *group_;
    std::vector<Element> out;
    const Element inv = G.inverse(x);
    Element acc = G.identity();
    for (unsigned e = 1; e < G.prime(); ++e) {
      acc = G.multiply(acc, inv);
      out.push_back(acc);
    }
    return out;
  }

  void sift_insert(Element x, Form f) {
    const PcGroup& G = *group_;
    const unsigned p = G.prime();
    for (;;) {
      const std::size_t d = x.depth();
      if (d == x.size()) {
        bool zero = true;
        for (auto& v : f) {
          v = mod(v, modulus_);
          if (v != 0) zero = false;
        }
        if (!zero) constraints_.push_back(std::move(f));
        return;
      }
      if (table_[d]) {
        const unsigned e = x[d];
        const Entry& ent = *table_[d];
        x = G.multiply(x, ent.inv_pows[e - 1]);
        axpy(f, -static_cast<std::int64_t>(e), ent.f);
        continue;
      }
      const auto k = static_cast<std::uint64_t>(inverse_mod(x[d], p));
      if (k != 1) {
        x = G.power(x, k);
        for (auto& v : f) v = mod(v * static_cast<std::int64_t>(k), modulus_);
      }
      Entry ent{x, f, inverse_powers(x)};
      Form fp = f;
      for (auto& v : fp) v = mod(v * p, modulus_);
      queue_.emplace_back(G.power(x, p), std::move(fp));
      for (const auto& other : table_)
        if (other) queue_.emplace_back(G.commutator(x, other->x), Form(width_, 0));
      table_[d] = std::move(ent);
      return;
    }
  }

  GroupPtr group_;
  std::size_t width_;
  std::int64_t modulus_;
  std::vector<std::optional<Entry>> table_;
  std::deque<std::pair<Element, Form>> queue_;
  std::vector<Form> constraints_;
};

SymbolicClosure symbolic_closure(GroupPtr group, std::span<const Element> gens,
                                 std::span<const std::vector<std::int64_t>> forms,
                                 std::int64_t modulus) {
  if (gens.size() != forms.size()) throw PreconditionError("one form per generator required");
  const std::size_t width = forms.empty() ? 0 : forms.front().size();
  IgsBuilder builder(group, width, std::max<std::int64_t>(modulus, 1));
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (!group->owns(gens[k])) throw PreconditionError("generator is not an element of the group");
    if (forms[k].size() != width) throw PreconditionError("forms must share one width");
    builder.add(gens[k], forms[k]);
  }
  return builder.finish();
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(GroupPtr group, std::vector<Element> igs)
    : group_(std::move(group)), igs_(std::move(igs)), depth_index_(group_->ngens(), -1) {
  const PcGroup& G = *group_;
  const unsigned p = G.prime();
  inv_powers_.reserve(igs_.size() * (p - 1));
  for (std::size_t k = 0; k < igs_.size(); ++k) {
    depth_index_[igs_[k].depth()] = static_cast<int>(k);
    const Element inv = G.inverse(igs_[k]);
    Element acc = G.identity();
    for (unsigned e = 1; e < p; ++e) {
      acc = G.multiply(acc, inv);
      inv_powers_.push_back(acc);
    }
  }
}

Subgroup Subgroup::trivial(GroupPtr group) { return Subgroup(std::move(group), {}); }

Subgroup Subgroup::full(GroupPtr group) {
  std::vector<Element> igs;
  for (std::size_t i = 0; i < group->ngens(); ++i) igs.push_back(group->generator(i));
  return Subgroup(std::move(group), std::move(igs));
}

Subgroup Subgroup::generated_by(GroupPtr group, std::span<const Element> gens) {
  std::vector<std::vector<std::int64_t>> forms(gens.size());
  return symbolic_closure(std::move(group), gens, forms, 1).subgroup;
}

std::uint64_t Subgroup::order() const { return ipow(group_->prime(), static_cast<unsigned>(igs_.size())); }

const Element& Subgroup::inverse_power(std::size_t k, unsigned e) const {
  return inv_powers_[k * (group_->prime() - 1) + (e - 1)];
}

std::optional<std::vector<unsigned>> Subgroup::decompose(const Element& x) const {
  std::vector<unsigned> a(igs_.size(), 0);
  Element y = x;
  for (;;) {
    const std::size_t d = y.depth();
    if (d == y.size()) return a;
    const int k = depth_index_[d];
    if (k < 0) return std::nullopt;
    const unsigned e = y[d];
    a[static_cast<std::size_t>(k)] = e;
    y = group_->multiply(y, inverse_power(static_cast<std::size_t>(k), e));
  }
}

bool Subgroup::contains(const Element& x) const { return decompose(x).has_value(); }

Element Subgroup::canonical_left(const Element& x) const {
  Element y = x;
  for (std::size_t k = 0; k < igs_.size(); ++k) {
    const unsigned e = y[igs_[k].depth()];
    if (e != 0) y = group_->multiply(y, inverse_power(k, e));
  }
  return y;
}

Element Subgroup::canonical_right(const Element& x) const {
  return group_->inverse(canonical_left(group_->inverse(x)));
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (group_ != other.group_) return false;
  return std::all_of(igs_.begin(), igs_.end(), [&](const Element& h) { return other.contains(h); });
}

bool Subgroup::is_abelian() const {
  for (std::size_t a = 0; a < igs_.size(); ++a)
    for (std::size_t b = a + 1; b < igs_.size(); ++b)
      if (!group_->commutator(igs_[a], igs_[b]).is_identity()) return false;
  return true;
}

bool Subgroup::operator==(const Subgroup& other) const {
  return group_ == other.group_ && igs_ == other.igs_;
}

bool Subgroup::operator<(const Subgroup& other) const {
  if (igs_.size() != other.igs_.size()) return igs_.size() < other.igs_.size();
  return igs_ < other.igs_;
}

std::size_t SubgroupHash::operator()(const Subgroup& s) const noexcept {
  std::size_t h = s.rank();
  ElementHash eh;
  for (const auto& x : s.igs()) h = h * 1000003u ^ eh(x);
  return h;
}

// ---------------------------------------------------------------------------

RightCosets right_cosets(const Subgroup& b, std::size_t bound) {
  const PcGroup& G = b.group();
  const std::size_t n = G.ngens();
  std::vector<std::size_t> free;
  for (std::size_t d = 0; d < n; ++d)
    if (!b.has_depth(d)) free.push_back(d);
  const unsigned p = G.prime();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < free.size(); ++k) {
    total *= p;
    if (total > bound) throw IndexOverflowError("index exceeds coset bound of " + std::to_string(bound));
  }

  RightCosets out{b, {}};
  out.transversal.reserve(total);
  // Left-canonical representatives are exactly the vectors vanishing at the
  // igs depths; their inverses are the right-canonical ones.
  for (std::uint64_t r = 0; r < total; ++r) {
    Element x(n);
    std::uint64_t t = r;
    for (std::size_t k = free.size(); k-- > 0;) {
      x[free[k]] = static_cast<Exponent>(t % p);
      t /= p;
    }
    out.transversal.push_back(G.inverse(x));
  }
  return out;
}

std::vector<Element> left_coset_reps(const Subgroup& ambient, const Subgroup& b, std::size_t bound) {
  const PcGroup& G = b.group();
  auto act = [&](const Element& w, std::size_t k) {
    return b.canonical_left(G.multiply(ambient.inverse_power(k, 1), w));
  };
  return pc_orbit_stabilizer<Element, ElementHash>(G, ambient.igs(), G.identity(), act, bound).points;
}

std::vector<Element> elements(const Subgroup& b, std::uint64_t bound) {
  const PcGroup& G = b.group();
  if (b.order_log() > 63 || b.order() > bound)
    throw SizeGuardError("element enumeration beyond bound " + std::to_string(bound));
  const unsigned p = G.prime();
  const auto igs = b.igs();
  std::vector<Element> out{G.identity()};
  // Right-to-left so each new member multiplies the existing list.
  for (std::size_t k = igs.size(); k-- > 0;) {
    const std::size_t len = out.size();
    Element hp = G.identity();
    for (unsigned e = 1; e < p; ++e) {
      hp = G.multiply(hp, igs[k]);
      for (std::size_t i = 0; i < len; ++i) out.push_back(G.multiply(hp, out[i]));
    }
  }
  return out;
}

}  // namespace pchar
