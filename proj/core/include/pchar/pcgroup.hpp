#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace pchar {

using Exponent = std::uint8_t;

/// Normal form g1^e1 ... gn^en of a pc-group element; entries in [0, p).
class Element {
 public:
  Element() = default;
  explicit Element(std::size_t ngens) : e_(ngens, 0) {}
  explicit Element(std::vector<Exponent> e) : e_(std::move(e)) {}

  std::size_t size() const { return e_.size(); }
  Exponent operator[](std::size_t i) const { return e_[i]; }
  Exponent& operator[](std::size_t i) { return e_[i]; }
  const std::vector<Exponent>& exponents() const { return e_; }
  std::vector<Exponent>& exponents() { return e_; }

  bool is_identity() const;
  /// Index of the first nonzero exponent; size() for the identity.
  std::size_t depth() const;

  auto operator<=>(const Element&) const = default;
  bool operator==(const Element&) const = default;

 private:
  std::vector<Exponent> e_;
};

struct ElementHash {
  std::size_t operator()(const Element& x) const noexcept;
};

/// Power-commutator presentation of a finite p-group. Generators are
/// 0-based internally; relation right-hand sides are normal-form vectors.
struct PcPresentation {
  unsigned prime = 0;
  std::size_t ngens = 0;
  std::vector<std::string> names;            // empty means g1..gn
  std::vector<Element> powers;               // powers[i] = g_i^p
  std::vector<std::vector<Element>> conjugates;  // conjugates[j][i] = g_j^{g_i}, i < j

  /// Presentation of the elementary abelian group of order p^n; callers then
  /// overwrite the nontrivial relations.
  static PcPresentation elementary_abelian(unsigned p, std::size_t n,
                                           std::vector<std::string> names = {});

  Element unit(std::size_t i, unsigned e = 1) const;
  void set_power(std::size_t i, Element rhs) { powers.at(i) = std::move(rhs); }
  void set_conjugate(std::size_t j, std::size_t i, Element rhs);
  const Element& conjugate(std::size_t j, std::size_t i) const { return conjugates.at(j).at(i); }

  std::string name(std::size_t i) const;

  /// Throws PresentationError on out-of-range data or relations that touch
  /// generators at or before the defining index.
  void validate_syntax() const;
};

struct ConsistencyViolation {
  std::string overlap;
  Element lhs;
  Element rhs;
};

struct ConsistencyReport {
  std::vector<ConsistencyViolation> violations;
  bool ok() const { return violations.empty(); }
};

class PcGroup;
using GroupPtr = std::shared_ptr<const PcGroup>;

/// Runs the standard overlap tests by collection.
ConsistencyReport consistency_check(const PcPresentation& pres);

/// Finite p-group with multiplication by collection from the left.
/// Immutable once built; safe to share between threads.
class PcGroup {
 public:
  /// Rejects inconsistent presentations with InconsistentPresentation.
  static GroupPtr create(PcPresentation pres);

  const PcPresentation& presentation() const { return pres_; }
  unsigned prime() const { return p_; }
  std::size_t ngens() const { return n_; }
  /// log_p |G|.
  std::size_t order_log() const { return n_; }
  /// |G|; saturates at UINT64_MAX.
  std::uint64_t order() const;
  std::string name(std::size_t i) const { return pres_.name(i); }

  Element identity() const { return Element(n_); }
  Element generator(std::size_t i, unsigned e = 1) const;

  Element multiply(const Element& x, const Element& y) const;
  Element inverse(const Element& x) const;
  Element power(const Element& x, std::uint64_t k) const;
  /// g^{-1} x g.
  Element conjugate(const Element& x, const Element& g) const;
  /// x^{-1} y^{-1} x y.
  Element commutator(const Element& x, const Element& y) const;
  /// log_p of the order of x.
  unsigned order_log(const Element& x) const;

  /// Lexicographic rank in [0, |G|), only for |G| that fits in 64 bits.
  std::uint64_t rank(const Element& x) const;
  Element unrank(std::uint64_t r) const;

  bool owns(const Element& x) const;

 private:
  struct Unchecked {};
  PcGroup(PcPresentation pres, Unchecked);
  friend ConsistencyReport consistency_check(const PcPresentation& pres);

  void build_tables();
  const Element& conj_table(std::size_t i, std::size_t j, unsigned e, unsigned f) const;
  const Element& inverse_power(std::size_t i, unsigned e) const;

  void mul_gen_inplace(std::vector<Exponent>& x, std::size_t i, unsigned e) const;
  void mul_inplace(std::vector<Exponent>& x, const Element& w) const;

  PcPresentation pres_;
  unsigned p_;
  std::size_t n_;
  // (g_j^f)^(g_i^e) for i < j and e, f in [1, p).
  std::vector<Element> conj_;
  // g_i^{-e} for e in [1, p).
  std::vector<Element> inv_;
};

}  // namespace pchar
