#pragma once

#include <string>
#include <vector>

namespace sopq::cli {

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 1;
inline constexpr int kNotCertified = 2;

// Runs one command line. argv[0] is the program name. Nothing is written to
// the real stdout/stderr, so tests can call this directly.
RunResult run(const std::vector<std::string>& argv, const std::string& stdin_data = {});

}  // namespace sopq::cli
