#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pchar/induction.hpp"

namespace pchar {

/// A group with a distinguished subgroup H and linear character λ, plus the
/// structure the constructors know for free and the decomposition they
/// predict. Predictions are candidates only; callers certify them.
struct FamilyInstance {
  std::string family;  // "a", "b", or "wreath(<base>)"
  unsigned prime = 0;
  GroupPtr group;
  Subgroup whole;
  Subgroup h;
  LinearCharacter lambda;
  std::map<std::string, Subgroup> subgroups;
  std::map<std::string, Element> elements;
  std::size_t index_log = 0;  // log_p |G:H|
  std::size_t predicted_eta = 0;
  std::vector<Constituent> predicted;
  std::int64_t r = 0;  // family b: the residue with 3r = -1 (mod p)
  std::size_t iterate = 0;
  std::shared_ptr<const FamilyInstance> base;
  std::shared_ptr<const EtaHints> hints;
};

/// C_p acting on A = <a, b, z> ≅ C_p^3 by a^c = ab, b^c = bz; generators
/// (c, a, b, z). H = <a, z>, λ: a ↦ 0, z ↦ 1.
FamilyInstance family_a(unsigned p);

/// U = <1+x, 1+x^2> acting on M = F_p[x]/(x^4) by multiplication;
/// generators (u1, u2, m0, m1, m2, m3) with m_k = m(x^k).
/// H = <m0, m1, m3>, λ(m(a0 + a1 x + a3 x^3)) = ω^{r a0 + r a1 + a3}.
FamilyInstance family_b(unsigned p, std::optional<std::int64_t> r = std::nullopt);

/// The character μ_{f0,f1,f2} of M in family b: m(Σ a_k x^k) ↦ ω^{f0 a0 + f1 a1 + f2 a2 + a3}.
LinearCharacter family_b_mu(const FamilyInstance& fb, std::int64_t f0, std::int64_t f1, std::int64_t f2);
/// Λ_r = 1 x β^r x γ on A in family a.
LinearCharacter family_a_lambda_r(const FamilyInstance& fa, std::int64_t r);

/// G0 wr C_p with H = H0 x G0 x ... x G0 and λ = λ0 x 1 x ... x 1.
/// Requires [λ0^{G0}, 1] = 0.
FamilyInstance wreath_lift(const FamilyInstance& base);
/// wreath_lift applied `times` times.
FamilyInstance wreath_iterate(const FamilyInstance& base, std::size_t times);

/// Presentation of G0 wr C_p in the layout described by WreathStructure.
PcPresentation wreath_presentation(const PcPresentation& base);

/// {r(1 - i^3) mod p : i = 0..p-1}, sorted.
std::vector<std::int64_t> cubic_value_set(std::int64_t r, unsigned p);
/// The values for i = 1..p-1 in order of first appearance.
std::vector<std::int64_t> cubic_values_nonzero_i(std::int64_t r, unsigned p);
/// x in 1..p-1 with r(1 - x^3) ≡ e (mod p).
std::vector<std::int64_t> cubic_solutions(std::int64_t e, std::int64_t r, unsigned p);
std::size_t cubic_solution_count(std::int64_t e, std::int64_t r, unsigned p);

}  // namespace pchar
