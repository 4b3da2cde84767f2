#pragma once

#include <cstdint>

namespace pchar {

/// Nonnegative residue of a mod m (m > 0).
constexpr std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

constexpr std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

/// Inverse of a modulo a prime p; a must be nonzero mod p.
constexpr std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod(a, p);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    const std::int64_t tt = t - q * new_t;
    t = new_t;
    new_t = tt;
    const std::int64_t rr = r - q * new_r;
    r = new_r;
    new_r = rr;
  }
  return mod(t, p);
}

/// Binomial coefficient C(n, k) reduced mod m, for small nonnegative n.
constexpr std::int64_t binomial_mod(std::int64_t n, std::int64_t k, std::int64_t m) {
  if (k < 0 || n < k) return 0;
  std::int64_t num = 1, den = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    num *= (n - i);
    den *= (i + 1);
  }
  return mod(num / den, m);
}

}  // namespace pchar
