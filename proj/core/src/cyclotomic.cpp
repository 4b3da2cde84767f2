#include "pchar/cyclotomic.hpp"

#include <numeric>
#include <stdexcept>

#include "pchar/arith.hpp"
#include "pchar/error.hpp"

namespace pchar {

Cyclotomic::Cyclotomic(unsigned p, unsigned e) : p_(p), m_(ipow(p, e)), phi_(0) {
  phi_ = e == 0 ? 1 : m_ - m_ / p;
  c_.assign(phi_, 0);
}

Cyclotomic Cyclotomic::integer(unsigned p, unsigned e, std::int64_t n) {
  Cyclotomic z(p, e);
  z.c_[0] = n;
  return z;
}

Cyclotomic Cyclotomic::root(unsigned p, unsigned e, std::int64_t k) {
  Cyclotomic z(p, e);
  std::vector<std::int64_t> full(z.m_, 0);
  z.add_power(full, k, 1);
  z.reduce(full);
  return z;
}

void Cyclotomic::add_power(std::vector<std::int64_t>& full, std::int64_t k, std::int64_t coeff) const {
  full[static_cast<std::size_t>(mod(k, static_cast<std::int64_t>(m_)))] += coeff;
}

// ζ^{(p-1)m/p + r} = -Σ_{k<p-1} ζ^{k m/p + r} for 0 <= r < m/p.
void Cyclotomic::reduce(const std::vector<std::int64_t>& full) {
  std::vector<std::int64_t> v = full;
  if (m_ > 1) {
    const std::uint64_t step = m_ / p_;
    for (std::uint64_t j = phi_; j < m_; ++j) {
      const std::int64_t a = v[j];
      if (a == 0) continue;
      const std::uint64_t r = j - phi_;
      for (unsigned k = 0; k + 1 < p_; ++k) v[k * step + r] -= a;
      v[j] = 0;
    }
  }
  c_.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(phi_));
}

void Cyclotomic::check(const Cyclotomic& o) const {
  if (m_ != o.m_) throw PreconditionError("cyclotomic operands of different orders");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  check(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  check(o);
  std::vector<std::int64_t> full(m_, 0);
  for (std::size_t a = 0; a < c_.size(); ++a) {
    if (c_[a] == 0) continue;
    for (std::size_t b = 0; b < o.c_.size(); ++b)
      if (o.c_[b] != 0) add_power(full, static_cast<std::int64_t>(a + b), c_[a] * o.c_[b]);
  }
  Cyclotomic out = *this;
  out.reduce(full);
  return out;
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<std::int64_t> full(m_, 0);
  for (std::size_t a = 0; a < c_.size(); ++a)
    if (c_[a] != 0) add_power(full, -static_cast<std::int64_t>(a), c_[a]);
  Cyclotomic out = *this;
  out.reduce(full);
  return out;
}

bool Cyclotomic::is_zero() const {
  for (auto v : c_)
    if (v != 0) return false;
  return true;
}

bool Cyclotomic::is_integer() const {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

std::optional<std::int64_t> Cyclotomic::to_integer() const {
  if (!is_integer()) return std::nullopt;
  return c_[0];
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += std::to_string(c_[k]);
    if (k > 0) out += "*z^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

Rational Rational::make(std::int64_t n, std::int64_t d) {
  if (d == 0) throw PreconditionError("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n, d);
  return {n / g, d / g};
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace pchar
