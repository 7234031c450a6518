#pragma once

#include <iosfwd>

namespace ust {

/// Runs the `ust` command line. JSON goes to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 on a usage error and 2 on a domain error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ust
