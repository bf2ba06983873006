#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nextclosure/context.hpp"

namespace nextclosure {

/// Timing and work counters for one intent-enumeration algorithm.
struct RunReport {
  std::string algorithm;
  std::size_t intent_count = 0;
  /// Fastest of the repeated runs, in milliseconds.
  double wall_ms = 0.0;
  std::uint64_t successor_calls = 0;
  std::uint64_t superset_tests = 0;
  std::uint64_t max_superset_tests_per_call = 0;
  std::uint64_t intersections = 0;
  std::uint64_t closure_applications = 0;
};

/// Runs both the irreducible-generator and the classic algorithm `repeat`
/// times each on `k`.
std::vector<RunReport> benchmark_intents(const FormalContext& k, std::size_t repeat);

enum ExitCode : int { kExitOk = 0, kExitDomainError = 1, kExitUsageError = 2 };

/// Entry point of the command-line tool; `args` excludes the program name.
/// Results go to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nextclosure
