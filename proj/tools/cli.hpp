#ifndef WULFF_TOOLS_CLI_HPP
#define WULFF_TOOLS_CLI_HPP

#include <iosfwd>

namespace wulff {

/// Entry point of the `wulff` tool. Writes results to `out` and diagnostics
/// to `err`; returns the process exit code.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wulff

#endif  // WULFF_TOOLS_CLI_HPP
