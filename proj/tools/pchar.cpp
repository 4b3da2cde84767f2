#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pchar/error.hpp"
#include "pchar/families.hpp"
#include "pchar/oracle.hpp"
#include "pchar/presentation_io.hpp"
#include "pchar/serialize.hpp"
#include "pchar/verify.hpp"

namespace {

using namespace pchar;

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GroupPtr load_group(const std::string& path) { return PcGroup::create(read_presentation_file(path)); }

// "a:0,z:1" -> words and exponents.
void parse_assignments(const PcGroup& G, const std::string& text, std::vector<Element>& gens,
                       std::vector<std::int64_t>& exps) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto colon = item.rfind(':');
    if (colon == std::string::npos) throw ParseError("character assignment '" + item + "' lacks ':'");
    gens.push_back(parse_word(G, item.substr(0, colon)));
    try {
      exps.push_back(std::stoll(item.substr(colon + 1)));
    } catch (const std::exception&) {
      throw ParseError("character assignment '" + item + "' has no integer exponent");
    }
  }
}

FamilyInstance build_family(const std::string& family, unsigned p, std::size_t iterate,
                            std::optional<std::int64_t> r) {
  if (family == "a") return wreath_iterate(family_a(p), iterate);
  if (family == "b") return wreath_iterate(family_b(p, r), iterate);
  throw PreconditionError("unknown family '" + family + "' (expected a or b)");
}

std::vector<CheckReport> run_all(const std::vector<std::string>& checks, const std::vector<unsigned>& primes,
                                 const CheckParams& base, unsigned jobs) {
  std::vector<CheckParams> runs;
  std::vector<std::string> names;
  for (const auto& c : checks)
    for (unsigned p : primes) {
      CheckParams cp = base;
      cp.prime = p;
      runs.push_back(cp);
      names.push_back(c);
    }
  std::vector<CheckReport> reports(runs.size());
  parallel_for(runs.size(), jobs, [&](std::size_t i) { reports[i] = run_check(names[i], runs[i]); });
  return reports;
}

int report(const std::vector<CheckReport>& reports, const std::string& out, bool timing) {
  std::cout << summary_table(reports);
  if (!out.empty()) write_or_print(out, emit_report_json(reports, timing));
  return all_passed(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character induction and eta verification for finite p-groups"};
  app.require_subcommand(1);

  // verify
  std::vector<std::string> checks;
  std::vector<unsigned> primes;
  CheckParams params;
  std::string out;
  bool timing = false;
  unsigned jobs = 1;
  auto* verify = app.add_subcommand("verify", "Run named checks and emit a report");
  verify->add_option("--check", checks, "Check name, or 'all'")->required();
  verify->add_option("--prime", primes, "Primes (0 or omitted: the check's default set)");
  verify->add_option("--iterate", params.iterate, "Wreath iterate count");
  verify->add_option("--family", params.family, "Family for lemma-dade2")->check(CLI::IsMember({"a", "b"}));
  verify->add_option("--out", out, "Write the JSON report here ('-' for stdout)");
  verify->add_flag("--timing", timing, "Include wall time in the JSON report");
  verify->add_option("--threads", params.threads, "Threads per scan (0: all cores)");
  verify->add_option("--jobs", jobs, "Checks run concurrently");

  // scan
  auto* scan = app.add_subcommand("scan", "Exhaustive scans");
  scan->require_subcommand(1);
  auto* scan_a = scan->add_subcommand("theorem-a", "Gap scan over all index-p^2 subgroups of family a");
  scan_a->add_option("--prime", primes, "Primes")->required();
  scan_a->add_option("--threads", params.threads, "Threads (0: all cores)");
  scan_a->add_option("--out", out, "Write the JSON report here");
  scan_a->add_flag("--timing", timing, "Include wall time in the JSON report");

  // eta
  std::string group_file, subgroup_text, char_text;
  std::uint64_t order = 0, oracle_bound = kDefaultOracleBound;
  auto* eta_cmd = app.add_subcommand("eta", "Certified number of constituents of an induced linear character");
  eta_cmd->add_option("--group", group_file, "Pc presentation file")->required();
  eta_cmd->add_option("--subgroup", subgroup_text, "Comma-separated generating words")->required();
  eta_cmd->add_option("--char", char_text, "Assignments word:exponent, comma-separated")->required();
  eta_cmd->add_option("--order", order, "Value order m (default p)");
  eta_cmd->add_option("--oracle-bound", oracle_bound, "Largest |G| for the exhaustive oracle");
  eta_cmd->add_option("--out", out, "Write the certificate JSON here");

  // oracle
  std::uint64_t irr_bound = kDefaultOracleBound;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive character oracle");
  oracle->require_subcommand(1);
  auto* irr = oracle->add_subcommand("irr", "Monomial descriptors of Irr(G)");
  irr->add_option("--group", group_file, "Pc presentation file")->required();
  irr->add_option("--bound", irr_bound, "Largest |G| accepted");
  irr->add_option("--out", out, "Write the JSON table here (default stdout)");

  // group
  std::string family;
  unsigned prime = 0;
  std::size_t iterate = 0;
  std::optional<std::int64_t> r;
  auto* group = app.add_subcommand("group", "Presentations");
  group->require_subcommand(1);
  auto* show = group->add_subcommand("show", "Print a presentation in canonical form");
  auto* fam_opt = show->add_option("--family", family, "Family a or b")->check(CLI::IsMember({"a", "b"}));
  show->add_option("--prime", prime, "Prime")->needs(fam_opt);
  show->add_option("--iterate", iterate, "Wreath iterates");
  show->add_option("--r", r, "Family b residue override");
  show->add_option("--group", group_file, "Pc presentation file")->excludes(fam_opt);
  auto* gcheck = group->add_subcommand("check", "Run the consistency check on a presentation file");
  gcheck->add_option("file", group_file, "Pc presentation file")->required();

  // certificate
  std::string cert_file;
  auto* cert = app.add_subcommand("certificate", "Certificates");
  cert->require_subcommand(1);
  auto* ccheck = cert->add_subcommand("check", "Re-validate a certificate or report file");
  ccheck->add_option("file", cert_file, "JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      std::vector<std::string> names;
      for (const auto& c : checks) {
        if (c == "all") names.insert(names.end(), check_names().begin(), check_names().end());
        else names.push_back(c);
      }
      if (primes.empty()) primes.push_back(0);
      return report(run_all(names, primes, params, jobs), out, timing);
    }
    if (*scan_a) return report(run_all({"theorem-a-scan"}, primes, params, 1), out, timing);

    if (*eta_cmd) {
      const auto G = load_group(group_file);
      const Subgroup h = Subgroup::generated_by(G, parse_word_list(*G, subgroup_text));
      std::vector<Element> gens;
      std::vector<std::int64_t> exps;
      parse_assignments(*G, char_text, gens, exps);
      const auto theta = LinearCharacter::from_generators(h, gens, exps, order == 0 ? G->prime() : order);
      EtaHints hints;
      hints.oracle_bound = oracle_bound;
      const auto res = eta(theta, Subgroup::full(G), hints);
      std::cout << "eta " << res.count << " (tier " << res.tier << ")\n";
      for (const auto& c : res.certificate.constituents)
        std::cout << "  " << c.multiplicity << " x degree " << c.descriptor.degree() << "  "
                  << c.descriptor.character.to_string() << "\n";
      if (!out.empty()) write_or_print(out, certificate_to_json(res.certificate).dump(2) + "\n");
      return 0;
    }

    if (*irr) {
      const auto G = load_group(group_file);
      write_or_print(out, irr_table_to_json(irr_exhaustive(Subgroup::full(G), irr_bound)).dump(2) + "\n");
      return 0;
    }

    if (*show) {
      if (!group_file.empty()) {
        std::cout << format_presentation(load_group(group_file)->presentation());
        return 0;
      }
      if (family.empty() || prime == 0) throw PreconditionError("group show needs --family and --prime, or --group");
      std::cout << format_presentation(build_family(family, prime, iterate, r).group->presentation());
      return 0;
    }

    if (*gcheck) {
      const auto pres = read_presentation_file(group_file);
      const auto rep = consistency_check(pres);
      if (rep.ok()) {
        std::cout << "consistent: order " << pres.prime << "^" << pres.ngens << "\n";
        return 0;
      }
      for (const auto& v : rep.violations)
        std::cout << "inconsistent at " << v.overlap << ": " << format_word(pres, v.lhs)
                  << " != " << format_word(pres, v.rhs) << "\n";
      return 1;
    }

    if (*ccheck) {
      const auto doc = Json::parse(read_file(cert_file));
      std::vector<Json> certs;
      if (doc.contains("reports")) {
        for (const auto& rep : doc["reports"])
          for (const auto& c : rep["certificates"]) certs.push_back(c);
      } else {
        certs.push_back(doc);
      }
      bool ok = true;
      for (std::size_t i = 0; i < certs.size(); ++i) {
        const auto res = revalidate_certificate(certs[i]);
        std::cout << "certificate " << i << ": " << (res.ok ? "valid" : "INVALID") << " " << res.message << "\n";
        ok = ok && res.ok;
      }
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
