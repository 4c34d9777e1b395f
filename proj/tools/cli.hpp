// cli.hpp: the eitspec command line, callable in-process for tests.

#pragma once

#include <ostream>

namespace eitspec::cli {

enum ExitStatus : int { kOk = 0, kUsage = 1, kDataError = 2, kNumericalError = 3 };

// Subcommands: run, spectrum, plan, convert, list. Results go to `out` (or to
// files), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eitspec::cli
