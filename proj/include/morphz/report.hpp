#pragma once

// Reporting layer behind the CLI: per-group predicate reports (optionally
// cross-checked against the brute-force oracle), the census sweep, and the
// named verification suites.

#include "morphz/endo.hpp"
#include "morphz/expr.hpp"
#include "morphz/rings.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace morphz {

struct PredicateReport {
  FgAbGroup group;
  GroupOrder group_order = GroupOrder::finite(1);
  MorphicVerdict weakly_morphic;
  bool morphic = false;
  std::vector<Int> regular_scalars;  // 0 <= a < exponent (finite); {0, 1} scan otherwise
  bool oracle_used = false;
  std::optional<Int> oracle_endo_count;  // set when the oracle ran
};

// Closed-form report; with_oracle additionally recomputes every verdict by
// exhaustive enumeration and throws DisagreementError on any mismatch.
// The oracle path requires a finite group (std::invalid_argument otherwise).
PredicateReport build_report(const FgAbGroup& g, bool with_oracle = false,
                             const Int& budget = kDefaultEndoBudget);

nlohmann::json report_json(const PredicateReport& r);
std::string report_text(const PredicateReport& r);

std::vector<PredicateReport> census(long max_order);
std::string census_text(const std::vector<PredicateReport>& rows);

struct VerifyResult {
  std::string suite;
  bool pass = false;
  std::vector<std::string> lines;  // human-readable facts, one per line
};

// Suites, by their CLI names:
//   das         every finite class up to the bound is weakly morphic, and
//               both oracle and closed form reject free-rank groups
//   rats-oracle is_morphic_fg agrees with the brute-force oracle classwise
//   e5e         is_mul_regular implies a-morphic, agrees with the
//               regular-witness search, and the Z/4, a=2 gap is real
//   ftft        modules over squarefree Z/n are weakly morphic with every
//               scalar regular
//   gtg         product-ring modules decide componentwise
//   p51         scalars from Z/n and from Z decide alike when exp(M) | n
//   snf         randomized Smith-form property checks
//   cyclic      for cyclic groups, morphic and weakly morphic coincide
std::vector<std::string> verify_suite_names();
VerifyResult run_verify_suite(const std::string& name, std::optional<long> max_order);

VerifyResult verify_das(long max_order);
VerifyResult verify_rats_oracle(long max_order, const Int& budget = kDefaultEndoBudget);
VerifyResult verify_e5e(long max_order);
VerifyResult verify_ftft(long max_order);
VerifyResult verify_gtg(long bound);
VerifyResult verify_p51(long max_order);
VerifyResult verify_snf(long num_matrices);
VerifyResult verify_cyclic(long max_n);

}  // namespace morphz
