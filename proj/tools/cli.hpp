#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinrev_cli {

enum ExitCode { kPassed = 0, kFailed = 1, kUsage = 2 };

// Anything that should end the process with a given exit code and message.
class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

struct RunConfig {
  std::string command;
  int n = 0;
  std::optional<int> m;
  int protocol = 1;
  std::string engine = "majorana";
  double tol = 1e-10;
  int steps = 100;
  std::optional<std::string> out_path;
  std::string format = "json";
  bool uncorrected_h = false;
};

struct EngineResult {
  std::string engine;
  bool passed = false;
  double metric = 0.0;
};

struct VerifyReport {
  bool passed = false;
  double metric = 0.0;
  std::string engine;
  double wall_time = 0.0;
  std::vector<EngineResult> engines;
};

/// argv excludes the program name. Throws CliError{kUsage} on bad input;
/// "--help" throws CliError{kPassed} carrying the help text.
RunConfig parse_args(const std::vector<std::string>& argv);

VerifyReport run_verify(const RunConfig& cfg);

struct SweepRow {
  int n = 0;
  int protocol = 1;
  std::optional<int> m;
  double t_n = 0.0;  // protocol time at unit maximal coupling
  double lower_bound = 0.0;
  double ratio = 0.0;
  double max_coupling = 0.0;
  double uniformity = 0.0;
  double verify_metric = 0.0;
  bool passed = false;
};

std::vector<SweepRow> run_sweep(const RunConfig& cfg);

/// Executes a parsed command, writing data to `out` and diagnostics to
/// `err`. Returns the process exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// parse_args + run, with --out handling and error reporting.
int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace spinrev_cli
