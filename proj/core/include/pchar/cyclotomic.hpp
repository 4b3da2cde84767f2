#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pchar {

/// Element of Z[ζ] for ζ a primitive m-th root of unity, m = p^e. Stored in
/// the basis ζ^0 .. ζ^{φ(m)-1}; higher powers are rewritten with Φ_m(ζ) = 0,
/// which makes the representation unique.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1, 1) {}
  Cyclotomic(unsigned p, unsigned e);

  static Cyclotomic integer(unsigned p, unsigned e, std::int64_t n);
  /// ζ^k.
  static Cyclotomic root(unsigned p, unsigned e, std::int64_t k);

  std::uint64_t order() const { return m_; }
  const std::vector<std::int64_t>& coefficients() const { return c_; }

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic operator+(const Cyclotomic& o) const { return Cyclotomic(*this) += o; }
  Cyclotomic operator-(const Cyclotomic& o) const { return Cyclotomic(*this) -= o; }
  Cyclotomic operator*(const Cyclotomic& o) const;
  /// Image under ζ ↦ ζ^{-1} (complex conjugation).
  Cyclotomic conj() const;

  bool is_zero() const;
  bool is_integer() const;
  std::optional<std::int64_t> to_integer() const;
  bool operator==(const Cyclotomic& o) const { return m_ == o.m_ && c_ == o.c_; }

  std::string to_string() const;

 private:
  void add_power(std::vector<std::int64_t>& full, std::int64_t k, std::int64_t coeff) const;
  void reduce(const std::vector<std::int64_t>& full);
  void check(const Cyclotomic& o) const;

  unsigned p_;
  std::uint64_t m_;
  std::uint64_t phi_;
  std::vector<std::int64_t> c_;
};

/// Exact nonnegative-or-negative rational, always in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t n, std::int64_t d);
  bool is_integer() const { return den == 1; }
  bool operator==(const Rational&) const = default;
  std::string to_string() const;
};

}  // namespace pchar
