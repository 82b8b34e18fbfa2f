#pragma once

#include <iosfwd>

namespace spcoarsen::cli {

/// Entry point for the `spcoarsen` tool. Returns the process exit code:
/// 0 on success, 1 on usage, input or validation errors, 2 on numerical
/// failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spcoarsen::cli
