#pragma once

#include <iosfwd>

namespace soscert::cli {

enum ExitCode : int { success = 0, negative = 1, usage = 2, inconclusive = 3 };

/// Runs one command line; reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace soscert::cli
