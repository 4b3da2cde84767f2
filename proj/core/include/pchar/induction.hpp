#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pchar/characters.hpp"

namespace pchar {

struct IrrTable;

/// [μ1^K, μ2^K] by the Mackey formula: one term per (B1, B2) double coset
/// B1 w B2, equal to 1 iff μ1 and the w-conjugate of μ2 agree on
/// B1 ∩ w B2 w^{-1}.
std::uint64_t mackey_inner_product(const MonomialDescriptor& d1, const MonomialDescriptor& d2,
                                   std::size_t bound = kDefaultCosetBound);

struct Constituent {
  MonomialDescriptor descriptor;
  std::uint64_t multiplicity = 0;
};

/// θ^K = Σ m_i χ_i with every product between the pieces checked exactly.
struct DecompositionCertificate {
  MonomialDescriptor target;
  std::vector<Constituent> constituents;
  /// gram[i][j] = [χ_i, χ_j].
  std::vector<std::vector<std::uint64_t>> gram;
  /// [θ^K, χ_i].
  std::vector<std::uint64_t> target_products;
  /// [θ^K, θ^K].
  std::uint64_t target_norm = 0;

  struct Checks {
    bool irreducible = false;
    bool distinct = false;
    bool multiplicities = false;
    bool degree = false;
    bool frobenius = false;
    bool all() const { return irreducible && distinct && multiplicities && degree && frobenius; }
  } checks;

  std::size_t eta() const { return constituents.size(); }
  std::vector<std::uint64_t> multiplicities() const;
};

struct CertificationFailure {
  std::string check;  // irreducible | distinct | multiplicities | degree | frobenius
  std::size_t i = 0;
  std::size_t j = 0;
  std::int64_t expected = 0;
  std::int64_t actual = 0;
  std::string message() const;
};

struct CertifyResult {
  std::optional<DecompositionCertificate> certificate;
  std::vector<CertificationFailure> failures;
  bool ok() const { return certificate.has_value(); }
};

/// Checks a proposed decomposition of the (linear-character) target: every
/// candidate irreducible, pairwise distinct, multiplicities equal to the
/// inner products, degrees adding up. Candidates are put in canonical order.
CertifyResult certify_decomposition(const MonomialDescriptor& target, std::vector<Constituent> candidates);

struct EtaHints;

/// Group built as G0 wr C_p: generator 0 is the cycle t, copy c of G0
/// occupies generators [1 + c n0, 1 + (c+1) n0), t^{-1} (copy c) t = copy c+1.
struct WreathStructure {
  GroupPtr base_group;
  std::shared_ptr<const EtaHints> base_hints;
  std::size_t copies = 0;

  std::size_t base_ngens() const { return base_group->ngens(); }
  Element embed(const Element& x, std::size_t copy, std::size_t ngens) const;
  Element project(const Element& x, std::size_t copy) const;
};

enum TierMask : unsigned {
  kTierAbelian = 1u << 0,
  kTierWreath = 1u << 1,
  kTierOracle = 1u << 2,
  kAllTiers = 7u,
};

struct EtaHints {
  /// Abelian normal subgroup containing H.
  std::optional<Subgroup> abelian_normal;
  /// Search normal_closure(H) for an abelian overgroup when none is given.
  bool search_abelian = true;
  std::optional<WreathStructure> wreath;
  std::shared_ptr<const IrrTable> irr;
  std::uint64_t oracle_bound = 243;
  unsigned tiers = kAllTiers;
};

struct EtaResult {
  std::size_t count = 0;
  /// 0 for θ on the whole group, else the tier that produced the candidates.
  int tier = 0;
  DecompositionCertificate certificate;
};

/// Number of distinct irreducible constituents of θ^K with a verified
/// certificate. Throws NoStrategyError if no enabled tier applies.
EtaResult eta(const LinearCharacter& theta, const Subgroup& ambient, const EtaHints& hints = {});

struct CentralSplit {
  std::vector<LinearCharacter> extensions;
  std::vector<std::size_t> extension_etas;
  std::size_t eta_theta = 0;
  std::size_t sum = 0;
  bool holds() const { return sum == eta_theta; }
};

/// θ on H and Z1 central in K with |H Z1 : H| = p: decomposes η(θ^K) over
/// the p extensions of θ to H Z1.
CentralSplit central_extension_split(const LinearCharacter& theta, const Subgroup& z1, const Subgroup& ambient,
                                     const EtaHints& hints = {});

}  // namespace pchar
