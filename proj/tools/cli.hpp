#pragma once

#include <ostream>

namespace operadkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// Parses the command line and runs one verb. Reports go to `out`; errors
/// and `--verbose` timings go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace operadkit::cli
