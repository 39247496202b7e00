#ifndef OSCREP_TOOLS_CLI_HPP
#define OSCREP_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace oscrep::cli {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

/// Parses argv, runs the verb, writes the JSON report to `out` and a one-line
/// summary to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int exit_code_for(const std::string& status);

struct SuiteEntry {
  std::string name;
  std::string expected;
  std::string observed;
  std::string detail;

  bool ok() const { return expected == observed; }
};

std::vector<std::string> suite_names();
/// Runs a named bundle; throws on an unknown name.
std::vector<SuiteEntry> run_suite(const std::string& name);

}  // namespace oscrep::cli

#endif
