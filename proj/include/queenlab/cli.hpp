#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace queenlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Results go to out,
/// diagnostics to err. Returns 0 on success or a valid verdict, 1 when a
/// verification fails and 2 on usage errors or malformed input files.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace queenlab::cli
