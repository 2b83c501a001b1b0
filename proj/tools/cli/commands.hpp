#pragma once

#include <iosfwd>

#include "run_spec.hpp"

namespace pgame {

enum ExitCode : int { kOk = 0, kUsage = 2, kNumerical = 3 };

// Runs a finalized spec: the CSV goes to spec.out (or `csv` when out is
// empty), the SVG next to it, and a one-line summary to `summary`.
// Library exceptions propagate.
void run(const RunSpec& spec, std::ostream& csv, std::ostream& summary);

// Full command line entry point; maps errors to exit codes.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pgame
