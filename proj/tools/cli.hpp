#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace nearplanar::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kCounterexample = 2 };

/// Environment variable holding the default comma-separated prime list.
inline constexpr const char* kPrimesEnv = "NEARPLANAR_PRIMES";

/// Runs the command line `args` (args[0] is the program name) against the
/// given streams and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses "p1,p2,..." and checks each entry is a prime in [3, 2^62].
std::vector<std::uint64_t> parse_primes(const std::string& text);

}  // namespace nearplanar::cli
