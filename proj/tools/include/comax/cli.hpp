#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "comax/rational.hpp"
#include "comax/report.hpp"

namespace comax::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitBadInput = 2;

struct SuiteConfig {
  std::uint64_t seed = 0;
  std::uint64_t samples = 10'000;
  unsigned prefix_max = 2;
  std::vector<Rational> grid = {Rational(0), Rational(1, 2), Rational(1)};
  unsigned n = 2;
  std::uint64_t budget = 10'000'000;
  unsigned jobs = 1;
  std::string output_path;
  std::vector<std::string> inputs;
};

/// The config as recorded in reports. Leaves out jobs and the output path,
/// which must not change report contents.
nlohmann::json config_echo(const SuiteConfig& config);

inline constexpr std::string_view kSubcommands[] = {
    "verify-counterexample", "finite-census", "integral-properties", "tnorm-axioms",
    "comonotone-check",      "explore-problem1", "validate"};

struct RunOutcome {
  int exit_code = kExitOk;
  /// Absent only when the input was rejected before any suite ran.
  std::optional<VerificationReport> report;
  /// Human-readable problems with the input (exit code 2).
  std::vector<std::string> diagnostics;
};

/// Dispatches one subcommand. Never throws for bad input: that becomes
/// exit code 2 with diagnostics. Exit code 1 iff the report failed.
RunOutcome run(std::string_view subcommand, const SuiteConfig& config);

/// Full command line: parses flags, runs, writes the report to --output (or
/// stdout) and returns the process exit code.
int main_entry(int argc, char** argv);

}  // namespace comax::cli
