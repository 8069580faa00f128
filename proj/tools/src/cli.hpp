#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mqtc::cli {

enum ExitCode : int { exit_ok = 0, exit_usage = 2, exit_input = 3, exit_internal = 4 };

/// Runs the command line `args` (without the program name). Normal output
/// goes to `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a digest.
std::uint64_t fnv1a64(std::string_view bytes);

/// Current version string.
std::string_view version();

}  // namespace mqtc::cli
