#include "pchar/pcgroup.hpp"

#include <limits>
#include <sstream>

#include "pchar/arith.hpp"
#include "pchar/error.hpp"

namespace pchar {

bool Element::is_identity() const {
  for (Exponent v : e_)
    if (v != 0) return false;
  return true;
}

std::size_t Element::depth() const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != 0) return i;
  return e_.size();
}

std::size_t ElementHash::operator()(const Element& x) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Exponent v : x.exponents()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

PcPresentation PcPresentation::elementary_abelian(unsigned p, std::size_t n,
                                                  std::vector<std::string> names) {
  PcPresentation pres;
  pres.prime = p;
  pres.ngens = n;
  pres.names = std::move(names);
  pres.powers.assign(n, Element(n));
  pres.conjugates.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    pres.conjugates[j].reserve(j);
    for (std::size_t i = 0; i < j; ++i) pres.conjugates[j].push_back(pres.unit(j));
  }
  return pres;
}

Element PcPresentation::unit(std::size_t i, unsigned e) const {
  Element x(ngens);
  x[i] = static_cast<Exponent>(e % prime);
  return x;
}

void PcPresentation::set_conjugate(std::size_t j, std::size_t i, Element rhs) {
  if (i >= j) throw PresentationError("conjugate relation needs i < j");
  conjugates.at(j).at(i) = std::move(rhs);
}

std::string PcPresentation::name(std::size_t i) const {
  if (i < names.size() && !names[i].empty()) return names[i];
  return "g" + std::to_string(i + 1);
}

void PcPresentation::validate_syntax() const {
  if (!is_prime(prime) || prime > 251)
    throw PresentationError("prime must be a prime below 256, got " + std::to_string(prime));
  if (ngens == 0) throw PresentationError("presentation needs at least one generator");
  if (!names.empty() && names.size() != ngens)
    throw PresentationError("names list does not match generator count");
  if (powers.size() != ngens || conjugates.size() != ngens)
    throw PresentationError("relation tables do not match generator count");

  auto check_word = [&](const Element& w, std::size_t min_index, const std::string& what) {
    if (w.size() != ngens) throw PresentationError(what + ": word has wrong length");
    for (std::size_t k = 0; k < ngens; ++k) {
      if (w[k] >= prime) throw PresentationError(what + ": exponent out of range");
      if (w[k] != 0 && k < min_index)
        throw PresentationError(what + ": involves generator " + name(k) +
                                " at or before the defining index");
    }
  };
  for (std::size_t i = 0; i < ngens; ++i)
    check_word(powers[i], i + 1, "pow " + std::to_string(i + 1));
  for (std::size_t j = 0; j < ngens; ++j) {
    if (conjugates[j].size() != j) throw PresentationError("conjugate table is ragged");
    for (std::size_t i = 0; i < j; ++i)
      check_word(conjugates[j][i], i + 1,
                 "conj " + std::to_string(j + 1) + " " + std::to_string(i + 1));
  }
}

// ---------------------------------------------------------------------------

PcGroup::PcGroup(PcPresentation pres, Unchecked)
    : pres_(std::move(pres)), p_(pres_.prime), n_(pres_.ngens) {
  pres_.validate_syntax();
  if (n_ * n_ * (p_ - 1) * (p_ - 1) > 20'000'000)
    throw SizeGuardError("conjugation table too large for this presentation");
  build_tables();
}

GroupPtr PcGroup::create(PcPresentation pres) {
  auto report = consistency_check(pres);
  if (!report.ok())
    throw InconsistentPresentation("inconsistent presentation at overlap " +
                                   report.violations.front().overlap);
  return std::shared_ptr<const PcGroup>(new PcGroup(std::move(pres), Unchecked{}));
}

std::uint64_t PcGroup::order() const {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / p_)
      return std::numeric_limits<std::uint64_t>::max();
    r *= p_;
  }
  return r;
}

const Element& PcGroup::conj_table(std::size_t i, std::size_t j, unsigned e, unsigned f) const {
  const std::size_t q = p_ - 1;
  return conj_[((i * n_ + j) * q + (e - 1)) * q + (f - 1)];
}

const Element& PcGroup::inverse_power(std::size_t i, unsigned e) const {
  return inv_[i * (p_ - 1) + (e - 1)];
}

// x <- x * g_i^e. Writing x = prefix * tail with tail in <g_{i+1},...>,
// x g_i^e = prefix g_i^e * tail^(g_i^e), and the conjugated tail is a
// product of table entries supported strictly after i.
void PcGroup::mul_gen_inplace(std::vector<Exponent>& x, std::size_t i, unsigned e) const {
  std::vector<Exponent> tail(x.begin() + static_cast<std::ptrdiff_t>(i) + 1, x.end());
  bool has_tail = false;
  for (std::size_t k = i + 1; k < n_; ++k) {
    if (x[k] != 0) has_tail = true;
    x[k] = 0;
  }
  unsigned s = x[i] + e;
  if (s >= p_) {
    s -= p_;
    const Element& pw = pres_.powers[i];
    for (std::size_t k = i + 1; k < n_; ++k) x[k] = pw[k];
  }
  x[i] = static_cast<Exponent>(s);
  if (!has_tail) return;
  for (std::size_t j = i + 1; j < n_; ++j) {
    const unsigned f = tail[j - i - 1];
    if (f != 0) mul_inplace(x, conj_table(i, j, e, f));
  }
}

void PcGroup::mul_inplace(std::vector<Exponent>& x, const Element& w) const {
  for (std::size_t k = 0; k < n_; ++k)
    if (w[k] != 0) mul_gen_inplace(x, k, w[k]);
}

void PcGroup::build_tables() {
  const std::size_t q = p_ - 1;
  conj_.assign(n_ * n_ * q * q, Element());
  inv_.assign(n_ * q, Element());
  auto slot = [&](std::size_t i, std::size_t j, unsigned e, unsigned f) -> Element& {
    return conj_[((i * n_ + j) * q + (e - 1)) * q + (f - 1)];
  };
  // Entries for index i only use multiplication among generators > i,
  // so filling from the last generator backwards is well founded.
  for (std::size_t ii = n_; ii-- > 0;) {
    for (std::size_t j = ii + 1; j < n_; ++j) {
      const Element& c = pres_.conjugates[j][ii];
      slot(ii, j, 1, 1) = c;
      for (unsigned f = 2; f <= q; ++f) {
        Element w = slot(ii, j, 1, f - 1);
        mul_inplace(w.exponents(), c);
        slot(ii, j, 1, f) = std::move(w);
      }
    }
    for (unsigned e = 2; e <= q; ++e) {
      for (std::size_t j = ii + 1; j < n_; ++j) {
        for (unsigned f = 1; f <= q; ++f) {
          const Element& prev = slot(ii, j, e - 1, f);
          Element w(n_);
          for (std::size_t k = ii + 1; k < n_; ++k)
            if (prev[k] != 0) mul_inplace(w.exponents(), slot(ii, k, 1, prev[k]));
          slot(ii, j, e, f) = std::move(w);
        }
      }
    }
  }
  // g_i^{-e} = g_i^{p-e} * (g_i^p)^{-1}; the power word lives after i.
  for (std::size_t ii = n_; ii-- > 0;) {
    const Element& pw = pres_.powers[ii];
    Element pw_inv(n_);
    for (std::size_t k = n_; k-- > ii + 1;)
      if (pw[k] != 0) mul_inplace(pw_inv.exponents(), inv_[k * q + (pw[k] - 1)]);
    for (unsigned e = 1; e <= q; ++e) {
      Element w(n_);
      w[ii] = static_cast<Exponent>(p_ - e);
      mul_inplace(w.exponents(), pw_inv);
      inv_[ii * q + (e - 1)] = std::move(w);
    }
  }
}

Element PcGroup::generator(std::size_t i, unsigned e) const { return pres_.unit(i, e); }

Element PcGroup::multiply(const Element& x, const Element& y) const {
  Element r = x;
  mul_inplace(r.exponents(), y);
  return r;
}

Element PcGroup::inverse(const Element& x) const {
  Element r(n_);
  for (std::size_t k = n_; k-- > 0;)
    if (x[k] != 0) mul_inplace(r.exponents(), inverse_power(k, x[k]));
  return r;
}

Element PcGroup::power(const Element& x, std::uint64_t k) const {
  Element result(n_);
  Element base = x;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

Element PcGroup::conjugate(const Element& x, const Element& g) const {
  return multiply(multiply(inverse(g), x), g);
}

Element PcGroup::commutator(const Element& x, const Element& y) const {
  return multiply(inverse(multiply(y, x)), multiply(x, y));
}

unsigned PcGroup::order_log(const Element& x) const {
  unsigned k = 0;
  Element y = x;
  while (!y.is_identity()) {
    y = power(y, p_);
    ++k;
    if (k > n_) throw Error("element order exceeds group order; presentation is broken");
  }
  return k;
}

std::uint64_t PcGroup::rank(const Element& x) const {
  std::uint64_t r = 0;
  for (std::size_t k = 0; k < n_; ++k) r = r * p_ + x[k];
  return r;
}

Element PcGroup::unrank(std::uint64_t r) const {
  Element x(n_);
  for (std::size_t k = n_; k-- > 0;) {
    x[k] = static_cast<Exponent>(r % p_);
    r /= p_;
  }
  return x;
}

bool PcGroup::owns(const Element& x) const {
  if (x.size() != n_) return false;
  for (Exponent v : x.exponents())
    if (v >= p_) return false;
  return true;
}

// ---------------------------------------------------------------------------

ConsistencyReport consistency_check(const PcPresentation& pres) {
  pres.validate_syntax();
  const PcGroup g(pres, PcGroup::Unchecked{});
  const std::size_t n = pres.ngens;
  const unsigned p = pres.prime;
  ConsistencyReport report;

  auto label = [&](std::initializer_list<std::string> parts) {
    std::ostringstream os;
    bool first = true;
    for (const auto& s : parts) {
      if (!first) os << ' ';
      os << s;
      first = false;
    }
    return os.str();
  };
  auto test = [&](const Element& a, const Element& b, const Element& c, std::string what) {
    Element lhs = g.multiply(g.multiply(a, b), c);
    Element rhs = g.multiply(a, g.multiply(b, c));
    if (lhs != rhs) report.violations.push_back({std::move(what), std::move(lhs), std::move(rhs)});
  };

  for (std::size_t i = 0; i < n; ++i) {
    const Element gi = g.generator(i);
    const Element gi_pm1 = g.generator(i, p - 1);
    const std::string ni = pres.name(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Element gj = g.generator(j);
      const std::string nj = pres.name(j);
      for (std::size_t k = j + 1; k < n; ++k)
        test(g.generator(k), gj, gi, label({pres.name(k), nj, ni}));
      test(g.generator(j, p - 1), gj, gi, label({nj + "^" + std::to_string(p), ni}));
      test(gj, gi_pm1, gi, label({nj, ni + "^" + std::to_string(p)}));
    }
    test(gi_pm1, gi, gi, label({ni + "^" + std::to_string(p + 1)}));
  }
  return report;
}

}  // namespace pchar
