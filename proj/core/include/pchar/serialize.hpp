#pragma once

#include <nlohmann/json.hpp>

#include "pchar/induction.hpp"
#include "pchar/oracle.hpp"

namespace pchar {

using Json = nlohmann::ordered_json;

/// Subgroup as its igs in g-notation words.
Json subgroup_to_json(const Subgroup& b);
Subgroup subgroup_from_json(const GroupPtr& group, const Json& j);

Json descriptor_to_json(const MonomialDescriptor& d);
/// Rebuilds and re-validates (the character must be a homomorphism).
MonomialDescriptor descriptor_from_json(const GroupPtr& group, const Json& j);

/// Self-contained: embeds the presentation so it can be re-checked alone.
Json certificate_to_json(const DecompositionCertificate& cert);

struct CertificateCheck {
  bool ok = false;
  std::string message;
};

/// Rebuilds the group and descriptors from the document, re-runs the
/// certification and compares the recorded evidence with the recomputed one.
CertificateCheck revalidate_certificate(const Json& j);

Json irr_table_to_json(const IrrTable& table);

}  // namespace pchar
