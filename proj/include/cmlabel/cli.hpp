#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cmlabel {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitNegative = 1,  // verification ran and answered no
    kExitGuard = 2,     // refused by a size guard
    kExitInput = 3,     // malformed arguments or documents
};

/// Run the tool on args (program name excluded). The report goes to out,
/// structured errors to err.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lower-case hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace cmlabel
