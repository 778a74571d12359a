#pragma once

#include <iosfwd>

namespace polarfol {

// Parses argv and dispatches to the library.  Machine output goes to `out`;
// the effective-config line and diagnostics go to `err`.  Returns the
// process exit code: 0 success, 1 verification failure, 2 usage error,
// 64 catalog or guard refusal.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polarfol
