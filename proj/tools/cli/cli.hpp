#pragma once

#include <iosfwd>

namespace nvodmr::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,      // bad arguments, unreadable config, I/O failure
    kExitOverlap = 3,    // compare: curves do not overlap enough
    kExitSimulation = 4, // dimension limit or numerical failure
};

// Entry point shared by the nvodmr executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nvodmr::cli
