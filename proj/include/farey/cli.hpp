#pragma once

#include <iosfwd>

namespace farey::cli {

// Dispatches the command line and writes results to `out` and diagnostics to
// `err`. Returns 0 on success / verified, 1 when a verification ran and
// failed, 2 on usage or domain errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace farey::cli
