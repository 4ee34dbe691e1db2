#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace resolve {

/// Exit codes: 0 success / verified, 1 usage or input error, 2 refuted.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitRefuted = 2;

/// Command-line entry point; args[0] is the program name. Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace resolve
