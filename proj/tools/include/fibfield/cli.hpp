#ifndef FIBFIELD_CLI_HPP
#define FIBFIELD_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace fibfield::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Bound on q from a FIBFIELD_MAX_Q value; unset means the default, values
/// above the hard cap are clamped. Throws std::invalid_argument if malformed.
std::uint64_t max_q_from_env(const char* value);

/// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::uint64_t max_q);

}  // namespace fibfield::cli

#endif  // FIBFIELD_CLI_HPP
