#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "pchar/pcgroup.hpp"

namespace pchar {

/// Default bound on enumerated cosets and orbits.
inline constexpr std::size_t kDefaultCosetBound = 100'000;
/// Bound on |G| for brute-force structural routines.
inline constexpr std::uint64_t kStructureOrderBound = 1'000'000;

/// Subgroup of a PcGroup held as its canonical induced generating sequence:
/// distinct depths, leading exponent 1, and every member reduced to zero at
/// the depths of the other members. Two subgroups are equal iff their
/// sequences are equal.
class Subgroup {
 public:
  Subgroup() = default;

  static Subgroup trivial(GroupPtr group);
  static Subgroup full(GroupPtr group);
  static Subgroup generated_by(GroupPtr group, std::span<const Element> gens);

  const PcGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::span<const Element> igs() const { return igs_; }
  std::size_t rank() const { return igs_.size(); }

  /// log_p of the order.
  std::size_t order_log() const { return igs_.size(); }
  std::uint64_t order() const;
  /// Index of the igs member with leading depth d, or -1.
  int index_at_depth(std::size_t d) const { return depth_index_[d]; }
  bool has_depth(std::size_t d) const { return depth_index_[d] >= 0; }

  /// h_k^{-e} for the k-th igs member, e in [1, p).
  const Element& inverse_power(std::size_t k, unsigned e) const;

  bool contains(const Element& x) const;
  /// Exponents a_k with x = ... h_k^{a_k} ... over the igs, or nullopt.
  std::optional<std::vector<unsigned>> decompose(const Element& x) const;

  /// Canonical representative of the left coset xB.
  Element canonical_left(const Element& x) const;
  /// Canonical representative of the right coset Bx.
  Element canonical_right(const Element& x) const;

  bool is_subgroup_of(const Subgroup& other) const;
  bool is_abelian() const;

  bool operator==(const Subgroup& other) const;
  /// Lexicographic by igs exponent vectors; deterministic report ordering.
  bool operator<(const Subgroup& other) const;

 private:
  friend class IgsBuilder;
  Subgroup(GroupPtr group, std::vector<Element> igs);

  GroupPtr group_;
  std::vector<Element> igs_;
  std::vector<int> depth_index_;
  std::vector<Element> inv_powers_;
};

struct SubgroupHash {
  std::size_t operator()(const Subgroup& s) const noexcept;
};

/// Closure of a generating set where every generator carries a linear form
/// over Z_modulus (length `width`). The forms follow the group operation
/// additively, so the output assigns a form to each igs member and lists
/// every residual form met when a relation sifted to the identity. A map
/// sending forms to values is a homomorphism iff all residuals vanish.
struct SymbolicClosure {
  Subgroup subgroup;
  std::vector<std::vector<std::int64_t>> igs_forms;
  std::vector<std::vector<std::int64_t>> constraints;
};

SymbolicClosure symbolic_closure(GroupPtr group, std::span<const Element> gens,
                                 std::span<const std::vector<std::int64_t>> forms,
                                 std::int64_t modulus);

/// Right transversal of B in its group together with canonicalisation.
struct RightCosets {
  Subgroup subgroup;
  std::vector<Element> transversal;
  Element canonical(const Element& x) const { return subgroup.canonical_right(x); }
};

RightCosets right_cosets(const Subgroup& b, std::size_t bound = kDefaultCosetBound);

/// Points of K/B (left cosets, canonical reps) for B <= K, in orbit order.
std::vector<Element> left_coset_reps(const Subgroup& ambient, const Subgroup& b,
                                     std::size_t bound = kDefaultCosetBound);

/// Every element of B; guarded by `bound` on |B|.
std::vector<Element> elements(const Subgroup& b, std::uint64_t bound = kStructureOrderBound);

Subgroup intersection(const Subgroup& b1, const Subgroup& b2);
Subgroup conjugate_subgroup(const Subgroup& b, const Element& g);
bool is_normal(const Subgroup& ambient, const Subgroup& b);
Subgroup normal_closure(const Subgroup& ambient, const Subgroup& b);
Subgroup derived_subgroup(const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);

/// Brute-force guarded (|K| <= kStructureOrderBound).
Subgroup centralizer(const Subgroup& ambient, std::span<const Element> s);
Subgroup center(const Subgroup& ambient);
Subgroup normal_core(const Subgroup& ambient, const Subgroup& b);
Subgroup normalizer(const Subgroup& ambient, const Subgroup& b);

/// H = K_0 < K_1 < ... < K_m = ambient, each normal of index p in the next.
std::vector<Subgroup> subnormal_chain(const Subgroup& ambient, const Subgroup& h);

/// Subgroups of K of order p^k, by cyclic extension; |K| <= p^max_order_log.
std::vector<Subgroup> enumerate_subgroups(const Subgroup& ambient, std::size_t order_log,
                                          std::size_t max_order_log = 5);
/// All subgroups, layered by order.
std::vector<std::vector<Subgroup>> subgroup_lattice(const Subgroup& ambient,
                                                    std::size_t max_order_log = 5);

/// Number of conjugacy classes by brute force.
std::size_t conjugacy_class_count(const Subgroup& ambient, std::uint64_t bound = kStructureOrderBound);

}  // namespace pchar
