#include "pchar/serialize.hpp"

#include "pchar/error.hpp"
#include "pchar/presentation_io.hpp"

namespace pchar {

Json subgroup_to_json(const Subgroup& b) {
  Json out = Json::array();
  for (const auto& x : b.igs()) out.push_back(format_word(b.group().presentation(), x));
  return out;
}

Subgroup subgroup_from_json(const GroupPtr& group, const Json& j) {
  std::vector<Element> gens;
  for (const auto& w : j) gens.push_back(parse_word(*group, w.get<std::string>()));
  Subgroup b = Subgroup::generated_by(group, gens);
  if (b.rank() != gens.size()) throw ParseError("subgroup words are not an induced generating sequence");
  return b;
}

Json descriptor_to_json(const MonomialDescriptor& d) {
  Json out;
  out["ambient"] = subgroup_to_json(d.ambient);
  out["subgroup"] = subgroup_to_json(d.inducing());
  out["value_order"] = d.character.value_order();
  out["exponents"] = d.character.exponents();
  out["degree"] = d.degree();
  return out;
}

MonomialDescriptor descriptor_from_json(const GroupPtr& group, const Json& j) {
  Subgroup ambient = subgroup_from_json(group, j.at("ambient"));
  Subgroup b = subgroup_from_json(group, j.at("subgroup"));
  auto mu = LinearCharacter::make(std::move(b), j.at("exponents").get<std::vector<std::int64_t>>(),
                                  j.at("value_order").get<std::uint64_t>());
  return {std::move(ambient), std::move(mu)};
}

Json certificate_to_json(const DecompositionCertificate& cert) {
  Json out;
  out["schema"] = "pchar-certificate/v1";
  out["presentation"] = format_presentation(cert.target.ambient.group().presentation());
  out["target"] = descriptor_to_json(cert.target);
  out["eta"] = cert.eta();
  Json cons = Json::array();
  for (const auto& c : cert.constituents) {
    Json e;
    e["descriptor"] = descriptor_to_json(c.descriptor);
    e["multiplicity"] = c.multiplicity;
    cons.push_back(std::move(e));
  }
  out["constituents"] = std::move(cons);
  Json ev;
  ev["gram"] = cert.gram;
  ev["target_products"] = cert.target_products;
  ev["target_norm"] = cert.target_norm;
  out["evidence"] = std::move(ev);
  Json checks;
  checks["irreducible"] = cert.checks.irreducible;
  checks["distinct"] = cert.checks.distinct;
  checks["multiplicities"] = cert.checks.multiplicities;
  checks["degree"] = cert.checks.degree;
  checks["frobenius"] = cert.checks.frobenius;
  out["checks"] = std::move(checks);
  return out;
}

CertificateCheck revalidate_certificate(const Json& j) {
  try {
    if (j.at("schema") != "pchar-certificate/v1") return {false, "unknown schema"};
    auto group = PcGroup::create(parse_presentation(j.at("presentation").get<std::string>()));
    const auto target = descriptor_from_json(group, j.at("target"));
    std::vector<Constituent> cands;
    for (const auto& c : j.at("constituents"))
      cands.push_back({descriptor_from_json(group, c.at("descriptor")), c.at("multiplicity").get<std::uint64_t>()});
    auto res = certify_decomposition(target, std::move(cands));
    if (!res.ok()) return {false, res.failures.front().message()};
    const Json again = certificate_to_json(*res.certificate);
    if (again.at("evidence") != j.at("evidence")) return {false, "recorded evidence differs from recomputation"};
    if (again.at("constituents") != j.at("constituents")) return {false, "constituent order or data differs"};
    if (again.at("eta") != j.at("eta")) return {false, "eta differs"};
    return {true, "ok"};
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
}

Json irr_table_to_json(const IrrTable& table) {
  Json out;
  out["schema"] = "pchar-irr/v1";
  out["presentation"] = format_presentation(table.group.group().presentation());
  out["group"] = subgroup_to_json(table.group);
  out["order"] = table.group.order();
  out["class_count"] = table.class_count;
  out["degrees"] = table.degrees;
  Json irr = Json::array();
  for (const auto& d : table.irreducibles) irr.push_back(descriptor_to_json(d));
  out["irreducibles"] = std::move(irr);
  return out;
}

}  // namespace pchar
