#pragma once

#include <iosfwd>

namespace hgar::cli {

enum ExitCode : int { pass = 0, fail = 1, indeterminate = 2 };

/// Entry point of the `hgar` tool. Errors are reported on `err` as a one-line JSON
/// object and map to exit code 1.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace hgar::cli
