#pragma once

#include <cstdint>
#include <vector>

#include "pchar/induction.hpp"

namespace pchar {

inline constexpr std::uint64_t kDefaultOracleBound = 243;

/// Every irreducible character of K as an induced linear character.
struct IrrTable {
  Subgroup group;
  std::vector<MonomialDescriptor> irreducibles;
  std::vector<std::uint64_t> degrees;
  std::size_t class_count = 0;

  std::uint64_t degree_square_sum() const;
};

/// Enumerates subgroups by decreasing order and induces each of their
/// linear characters, keeping the irreducible, new ones, until the degree
/// squares add up to |K|. Verifies that the count equals the class number.
IrrTable irr_exhaustive(const Subgroup& ambient, std::uint64_t bound = kDefaultOracleBound);

/// Multiplicity of every table member in the target, nonzero ones only.
std::vector<Constituent> decompose_against_irr(const MonomialDescriptor& target, const IrrTable& table);

}  // namespace pchar
