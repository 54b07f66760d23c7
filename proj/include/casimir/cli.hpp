#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace casimir {

// Full round-trip decimal formatting (17 significant digits, locale
// independent); every CSV cell goes through this.
std::string format_g17(double v);

// Whole command-line interface, testable in-process.  `args` excludes the
// program name.  Returns the process exit code: 0 success, 1 invalid
// input, 2 non-converged result or failed selftest.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Embedded invariant suite behind the `selftest` subcommand.
bool run_selftest(std::ostream& out);

}  // namespace casimir
