#ifndef HLAP_CLI_HPP
#define HLAP_CLI_HPP

#include "hlap/liealg.hpp"
#include "hlap/rewrite.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hlap {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kInputError = 2, kBudgetExhausted = 3 };

struct RunConfig {
  std::string subcommand;
  std::optional<int> m;
  std::string algebra;  // builtin selector or path to a definition file
  std::string format = "json";
  bool format_given = false;
  Mode mode = Mode::R;
  std::optional<double> budget_seconds;
  bool trace = false;
  std::string word;

  Budget budget() const { return budget_seconds ? Budget(*budget_seconds) : Budget(); }
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Everything `verify` runs for one algebra, in order.
std::vector<CheckResult> verify_checks(const Model& model, const Budget& budget);

int cmd_reduce(const RunConfig& cfg, std::ostream& out);
int cmd_classify(const RunConfig& cfg, std::ostream& out);
int cmd_graph(const RunConfig& cfg, std::ostream& out);
int cmd_coeff(const RunConfig& cfg, std::ostream& out);
int cmd_realize(const RunConfig& cfg, std::ostream& out);
int cmd_gamma(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parse arguments (without the program name), dispatch, map errors to exit codes.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hlap

#endif
