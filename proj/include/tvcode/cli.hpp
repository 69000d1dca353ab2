#pragma once

#include <iosfwd>

namespace tvcode::cli {

/// Run the tvcode command line: design | trajectory | verify | metrics.
/// Returns the process exit code: 0 success, 1 invariant violation
/// (verify), 2 input or validation error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace tvcode::cli
