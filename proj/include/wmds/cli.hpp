#pragma once

// Command-line front end: wmds {compute|check|plot|dimension} [flags].
// Exit codes: 0 success, 1 failed checks, 2 usage errors, 3 internal
// remainder failures.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wmds/errors.hpp"

namespace wmds {

enum class Command { Compute, Check, Plot, Dimension };
enum class Format { Json, Text, Svg, Tikz };

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

struct RunConfig {
  std::string family = "A";
  int rank = 1;
  int n = 1;
  std::vector<int> ell;
  Command command = Command::Compute;
  std::vector<std::string> checks;
  std::optional<int> truncate;  // defaults to the highest vertex height + 4
  std::uint64_t seed = 1;
  std::optional<Format> format;  // defaults depend on the command
  std::string out;               // empty: standard output
  std::string what = "N";        // N or f
  bool five_term = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

struct ParseResult {
  std::optional<RunConfig> config;
  int status = kExitOk;  // meaningful when config is empty (help or error)
};

ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Throws UsageError for configurations that cannot run.
void validate(const RunConfig& config);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int main_entry(int argc, const char* const* argv);

}  // namespace wmds
