#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pchar/serialize.hpp"

namespace pchar {

enum class CheckStatus { kPass, kFail, kSizeGuard, kHypothesis, kError };

std::string to_string(CheckStatus s);

struct CheckParams {
  unsigned prime = 0;        // 0: the check's default set of primes
  std::size_t iterate = 0;   // wreath iterations (thm-extensiondade, lemma-dade2)
  std::string family = "a";  // lemma-dade2: family the subgroup comes from
  unsigned threads = 0;      // 0: hardware concurrency
};

struct CheckReport {
  std::string name;
  Json params;
  Json expected;
  std::string provenance;  // "published", "derived" or "property"
  Json computed;  // pass iff computed == expected
  Json observed = Json::object();  // supporting values outside the comparison
  CheckStatus status = CheckStatus::kError;
  std::string detail;
  /// Embedded certificates (for scans: one witness per attained η value).
  Json certificates = Json::array();
  std::size_t certified = 0;  // certificates verified while running
  double wall_seconds = 0;
};

/// Names accepted by run_check.
const std::vector<std::string>& check_names();

/// Runs one named check. Size-guard and hypothesis violations become
/// statuses, never exceptions.
CheckReport run_check(const std::string& name, const CheckParams& params);

/// Versioned JSON document; wall times only when asked for, so reruns are
/// byte-identical by default.
std::string emit_report_json(const std::vector<CheckReport>& reports, bool include_timing = false);
std::string summary_table(const std::vector<CheckReport>& reports);
/// False when any report failed or errored.
bool all_passed(const std::vector<CheckReport>& reports);

/// Runs fn(i) for i in [0, n) on up to `threads` workers.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

/// Individual formula families; each returns (cases passed, cases run) and
/// the first failing case, if any.
struct FormulaResult {
  std::string name;
  unsigned prime = 0;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::string first_failure;
  bool ok() const { return passed == total; }
};

FormulaResult formula_orbit_exponents(unsigned p);
FormulaResult formula_fiber_criterion(unsigned p);
FormulaResult formula_mu_conjugation(unsigned p);
FormulaResult formula_orbit_representative(unsigned p);
FormulaResult formula_cubic_values(unsigned p);
FormulaResult formula_commutator(unsigned p);

}  // namespace pchar
