#pragma once

#include <iosfwd>

namespace chanda {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitDatabase = 2 };

// Entry point of the `chanda` tool, with the standard streams injected.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace chanda
