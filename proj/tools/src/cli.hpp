#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace iwahori::cli {

/// Flags shared by every command; IWAHORI_<NAME> environment variables supply defaults.
struct RunConfig {
  std::string group = "sp4";
  std::int64_t p = 7;
  int precision = 12;
  int degree = 30;
  std::uint64_t samples = 200;
  std::uint64_t seed = 1;
  std::string json_dir;
};

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kGateError = 2, kUsageError = 64 };

/// Parses argv, runs one command and prints its JSON report to `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace iwahori::cli
