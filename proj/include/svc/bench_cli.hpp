#pragma once

#include <iosfwd>

namespace svc::cli {

// Full command-line driver: parses argv, dispatches the subcommand, and
// writes reports to `out` and diagnostics to `err`. Returns the process
// exit code: 0 on success, 2 on a parameter or input error, 3 when a
// verification or counter check fails.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace svc::cli
