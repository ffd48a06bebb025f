#pragma once

#include <iosfwd>

namespace qcvx::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kViolation = 2;     // --fail-on-violation and verdict false
inline constexpr int kPrecondition = 3;  // audit or model precondition failed
inline constexpr int kInconsistent = 4;  // oracle and exact analysis disagree

inline constexpr const char* kVersion = "0.1.0";

/// Entry point of the `qcvx` tool: analyze, certify, oracle, corpus.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcvx::cli
