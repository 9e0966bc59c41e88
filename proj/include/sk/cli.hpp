#pragma once

namespace sk::cli {

/// Entry point shared by the sklimit binary and the test suite.
/// Exit codes: 0 success, 2 config error, 3 assumption-check failure,
/// 4 numerical failure.
int run(int argc, const char* const* argv);

inline int run(int argc, char** argv) {
  return run(argc, const_cast<const char* const*>(argv));
}

}  // namespace sk::cli
