#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace padic::cli {

enum class OutputFormat { Json, Table };

struct CommandRequest {
  std::string subcommand;
  std::vector<std::string> series;         // catalog specs such as "apery" or "hyp:1/2,1/2"
  std::optional<std::string> operator_file;  // raw operator JSON; its unit solution is the series
  int prime = 5;
  std::string ramification = "auto";  // auto | unramified | dwork
  int order = 64;
  int level = 1;
  int s = 1;
  int levels = 1;
  int deg_bound = 8;
  int exp_bound = 2;
  int period = 0;  // 0 takes the catalog annotation
  int k = 1;
  std::string kind = "ratio";  // certify-ratio: ratio | period | frobenius
  std::vector<int> derivs;
  OutputFormat format = OutputFormat::Json;
};

struct CommandResult {
  int exit_code = 0;
  std::string output;  // report stream (stdout)
  std::string error;   // diagnostics (stderr)
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

CommandResult execute(const CommandRequest& request);

/// Parse argv and execute; writes the report to out and diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace padic::cli
