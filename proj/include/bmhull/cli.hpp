#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bmhull {

// Runs one CLI subcommand. Returns 0 on success, 1 when `verify` finds a
// failing preset, 2 on usage or domain errors. All regular output goes to
// `out` (or the --output file), diagnostics to `err`; identical arguments
// produce byte-identical output.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bmhull
