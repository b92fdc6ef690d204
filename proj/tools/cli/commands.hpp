#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cli/config.hpp"

namespace cantorseq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;

// Each command writes its result to `out` and diagnostics to `err`, and returns an exit code.
int cmd_analyze(const JobConfig& config, std::ostream& out, std::ostream& err);
int cmd_sequence(const JobConfig& config, long from, long to, std::ostream& out, std::ostream& err);
int cmd_screen(const JobConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const JobConfig& config, std::ostream& out, std::ostream& err);
int cmd_stats(const JobConfig& config, std::ostream& out, std::ostream& err);

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t expected_failures = 0;
  std::vector<std::string> messages;

  bool ok() const noexcept { return failed == 0; }
};

std::vector<SuiteResult> run_verify_suites(const JobConfig& config);

}  // namespace cantorseq::cli
