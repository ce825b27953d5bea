/**
 * The `lovasz` command line: subcommands lovasz, check, classify,
 * invariants, verify and generate over the JSON file formats of io.hpp.
 *
 * Exit codes: 0 success (or every applicable verdict passed), 1 a verdict
 * failed, 2 unusable input (bad flags, unreadable or malformed file,
 * unmet hypotheses for `invariants`).
 */
#ifndef LOVASZ_CLI_HPP
#define LOVASZ_CLI_HPP

#include <iosfwd>

namespace lovasz {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFailed = 1;
inline constexpr int kExitInputError = 2;

/// Streams stand in for stdin / stdout / stderr so tests can drive it.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}   // namespace lovasz

#endif
