#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace motivic::cli {

// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1; // validation, realization or budget errors
inline constexpr int kExitParse = 2;   // malformed arguments, unreadable or malformed input

// Runs one command line (args excludes the program name). Results and
// structured error objects {"error": kind, "detail": message} are written to
// `out`; `--out path` redirects successful results to a file.
int run(const std::vector<std::string>& args, std::ostream& out);

} // namespace motivic::cli
