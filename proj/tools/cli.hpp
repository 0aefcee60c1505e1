#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace avgcase_cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitUsage = 2,
  kExitPropertyViolation = 3,
};

struct RunConfig {
  std::string experiment;  // catalog name, e.g. "quicksort" or "graphs.planted-clique"
  // Every parameter of the experiment in catalog order, defaults filled in.
  std::vector<std::pair<std::string, std::string>> params;
  std::uint64_t seed = 0;
  std::uint32_t trials = 1;
  std::string out;  // empty writes to stdout
  std::string format = "csv";
  std::string plot;  // optional SVG path

  const std::string* param(const std::string& name) const;
};

struct ParseResult {
  std::optional<RunConfig> config;  // empty when the process should exit right away
  int exit_code = kExitOk;
  std::string message;  // help text (exit 0) or error text
};

// args excludes the program name.
ParseResult parse_args(const std::vector<std::string>& args);

// Runs the experiment and writes records (and the plot, if requested).
// Diagnostics go to err; records go to out when config.out is empty.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Config lines embedded at the top of CSV output.
std::string config_comment(const RunConfig& config);

int main_entry(int argc, char** argv);

}  // namespace avgcase_cli
