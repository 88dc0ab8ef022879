// Command-line front end: check one group, census a range of orders, or run
// a named verification suite.  Exit codes: 0 ok, 2 usage or parse error,
// 3 enumeration budget exceeded, 4 internal disagreement (including a failing
// verification suite).

#include "morphz/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <iostream>
#include <optional>

namespace {

std::string iso_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace morphz;

  CLI::App app{"morphicity predicates for finitely generated abelian groups"};
  app.require_subcommand(1);
  app.fallthrough();  // let global flags like --timestamp trail the subcommand
  bool timestamp = false;
  app.add_flag("--timestamp", timestamp,
               "stamp output with the generation time (off by default, output stays reproducible)");

  std::string expr;
  bool use_oracle = false;
  bool check_json = false;
  CLI::App* check = app.add_subcommand("check", "decide the predicates for one group expression");
  check->add_option("EXPR", expr, "group expression, e.g. 'Z/2 + Z/4' or 'Z^2 + Z/6' or '0'")
      ->required();
  check->add_flag("--oracle", use_oracle,
                  "cross-check every verdict by brute-force endomorphism enumeration");
  check->add_flag("--json", check_json, "emit one JSON object");

  long max_order = 0;
  bool census_json = false;
  CLI::App* census_cmd = app.add_subcommand("census", "tabulate every class up to a given order");
  census_cmd->add_option("MAX_ORDER", max_order, "largest group order to include")->required();
  census_cmd->add_flag("--json", census_json, "emit one JSON object per line");

  std::string suite;
  long sweep_bound = 0;
  CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
  verify
      ->add_option("SUITE", suite,
                   "one of: das (finite iff weakly morphic), rats-oracle (morphic vs brute "
                   "force), e5e (regularity), ftft (squarefree quotient rings), gtg (product "
                   "rings), p51 (Z/n vs Z scalars), snf (normal-form properties), cyclic")
      ->required();
  verify->add_option("--max-order", sweep_bound, "sweep bound (suite-specific default)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help and --version stay 0; usage errors are 2
  }

  try {
    if (*check) {
      const PredicateReport r = build_report(parse_group(expr), use_oracle);
      if (check_json) {
        nlohmann::json j = report_json(r);
        if (timestamp) j["generated_at"] = iso_timestamp();
        std::cout << j.dump() << "\n";
      } else {
        if (timestamp) std::cout << "generated_at:     " << iso_timestamp() << "\n";
        std::cout << report_text(r);
      }
    } else if (*census_cmd) {
      if (max_order < 1) throw std::domain_error("MAX_ORDER must be >= 1");
      const auto rows = census(max_order);
      if (census_json) {
        for (const auto& row : rows) {
          nlohmann::json j = report_json(row);
          if (timestamp) j["generated_at"] = iso_timestamp();
          std::cout << j.dump() << "\n";
        }
      } else {
        if (timestamp) std::cout << "generated_at: " << iso_timestamp() << "\n";
        std::cout << census_text(rows);
      }
    } else {
      const std::optional<long> bound =
          sweep_bound >= 1 ? std::optional<long>(sweep_bound) : std::nullopt;
      const VerifyResult res = run_verify_suite(suite, bound);
      if (timestamp) std::cout << "generated_at: " << iso_timestamp() << "\n";
      std::cout << "suite: " << res.suite << "\n";
      for (const auto& line : res.lines) std::cout << "  " << line << "\n";
      std::cout << "result: " << (res.pass ? "PASS" : "FAIL") << "\n";
      if (!res.pass) return 4;
    }
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DisagreementError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " (position " << e.position() << ")\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
