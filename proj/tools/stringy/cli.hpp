#pragma once

#include <ostream>

namespace stringy::cli {

// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kInternal = 1;
inline constexpr int kInputError = 2;
inline constexpr int kRejected = 3;

/// Entry point of the `stringy` tool; returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// Combines per-file exit codes: internal > input error > rejected > pass.
int combine_exit_codes(int a, int b) noexcept;

}  // namespace stringy::cli
