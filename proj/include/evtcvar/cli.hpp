#pragma once

#include <iosfwd>

namespace evtcvar::cli {

/// Entry point of the `evtcvar` tool. Returns the process exit code:
/// 0 success, 2 config error, 3 data error, 4 domain error, 5 numeric error
/// (degenerate spacings included). Diagnostics go to `err` as one line.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace evtcvar::cli
