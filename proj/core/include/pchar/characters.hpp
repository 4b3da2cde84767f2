#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pchar/cyclotomic.hpp"
#include "pchar/subgroup.hpp"

namespace pchar {

/// Bound on the number of characters a single enumeration may produce.
inline constexpr std::size_t kCharacterBound = 100'000;

/// Degree-1 character of a subgroup B: μ(h_k) = ζ^{a_k} on the igs of B,
/// ζ a fixed primitive m-th root of unity, m = p^e. Always stored with the
/// smallest m that carries the values (the principal character has m = 1).
class LinearCharacter {
 public:
  LinearCharacter() = default;

  /// Validates the assignment against every relation of B; throws
  /// NotAHomomorphism naming the first violated relation.
  static LinearCharacter make(Subgroup domain, std::vector<std::int64_t> igs_exponents,
                              std::uint64_t value_order);
  /// Character determined by its values on a generating set of `domain`.
  static LinearCharacter from_generators(Subgroup domain, std::span<const Element> gens,
                                         std::span<const std::int64_t> exponents,
                                         std::uint64_t value_order);
  static LinearCharacter principal(Subgroup domain);
  /// Internal: caller guarantees the homomorphism property.
  static LinearCharacter trusted(Subgroup domain, std::vector<std::int64_t> igs_exponents,
                                 std::uint64_t value_order);

  const Subgroup& domain() const { return domain_; }
  std::uint64_t value_order() const { return m_; }
  const std::vector<std::int64_t>& exponents() const { return a_; }
  bool is_principal() const { return m_ == 1; }

  /// Exponent of μ(x) modulo value_order(), or nullopt when x is outside B.
  std::optional<std::int64_t> try_eval(const Element& x) const;
  std::int64_t evaluate(const Element& x) const;
  /// μ(x) as an exponent modulo `modulus` (a multiple of value_order()).
  std::int64_t evaluate_scaled(const Element& x, std::uint64_t modulus) const;

  LinearCharacter restrict_to(const Subgroup& sub) const;

  bool operator==(const LinearCharacter& o) const {
    return m_ == o.m_ && a_ == o.a_ && domain_ == o.domain_;
  }
  /// Deterministic order on characters of one domain.
  bool operator<(const LinearCharacter& o) const;

  std::string to_string() const;

 private:
  LinearCharacter(Subgroup domain, std::vector<std::int64_t> a, std::uint64_t m);
  void normalize();

  Subgroup domain_;
  std::vector<std::int64_t> a_;
  std::uint64_t m_ = 1;
};

struct LinearCharacterHash {
  std::size_t operator()(const LinearCharacter& c) const noexcept;
};

/// Do two characters take the same value at x and y respectively?
bool same_value(const LinearCharacter& c1, const Element& x, const LinearCharacter& c2, const Element& y);

/// Exponent of B/B' (the largest order of a linear character of B).
std::uint64_t abelianization_exponent(const Subgroup& b);

/// μ^g(x) = μ(g x g^{-1}), defined on g^{-1} B g.
LinearCharacter conjugate_character(const LinearCharacter& mu, const Element& g);

/// Every linear character of B.
std::vector<LinearCharacter> lin_all(const Subgroup& b, std::size_t bound = kCharacterBound);

/// Every linear character of `over` restricting to μ (empty if μ does not
/// extend). Works for any overgroup.
std::vector<LinearCharacter> enumerate_extensions(const LinearCharacter& mu, const Subgroup& over,
                                                  std::size_t bound = kCharacterBound);

/// Extensions of μ to A for the two supported shapes: A abelian, or
/// |A:H| = p with A = H Z for some Z central in A. Returns exactly |A:H|
/// characters.
std::vector<LinearCharacter> extension_fiber(const LinearCharacter& mu, const Subgroup& a);

struct CharacterOrbit {
  LinearCharacter representative;
  std::vector<LinearCharacter> members;
  std::vector<Element> transversal;  // representative^{transversal[k]} == members[k]
  Subgroup stabilizer;
};

/// Orbit of μ under conjugation by K; the domain of μ must be normal in K.
CharacterOrbit orbit_stabilizer(const LinearCharacter& mu, const Subgroup& ambient,
                                std::size_t bound = kDefaultCosetBound);

/// The induced character μ^K, described by (K, μ).
struct MonomialDescriptor {
  Subgroup ambient;
  LinearCharacter character;

  const Subgroup& inducing() const { return character.domain(); }
  /// log_p of the degree |K:B|.
  std::size_t degree_log() const { return ambient.order_log() - inducing().order_log(); }
  std::uint64_t degree() const;
  bool operator==(const MonomialDescriptor& o) const {
    return ambient == o.ambient && character == o.character;
  }
  bool operator<(const MonomialDescriptor& o) const;
};

/// Inner product of two induced characters summed over every element of K
/// with exact cyclotomic arithmetic. Independent of the Mackey formula.
Rational naive_induced_inner_product(const MonomialDescriptor& d1, const MonomialDescriptor& d2,
                                     std::uint64_t bound = 10'000);

/// All solutions y in (Z/m)^k of the rows Σ_j r[j] y_j ≡ r[k] (mod m), for
/// m a power of p. Solutions come out in a deterministic order.
std::vector<std::vector<std::int64_t>> solve_mod_prime_power(std::vector<std::vector<std::int64_t>> rows,
                                                             std::size_t k, unsigned p, std::int64_t m,
                                                             std::size_t bound);

}  // namespace pchar
