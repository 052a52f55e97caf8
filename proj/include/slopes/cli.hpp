#pragma once

#include <iosfwd>

namespace slopes {

// Full command-line surface. Returns the process exit status:
//   0  success
//   1  a verification-style subcommand found failures
//   2  usage error / malformed input syntax
//   3  domain error (meridian where forbidden, k not dividing a, ...)
// Failures emit a machine-readable record ("error=..." / "message=...") on err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace slopes
