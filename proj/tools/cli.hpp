#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wlev::cli {

/// Runs one `wlev` invocation. `args` excludes the program name. Word input
/// for `correct` comes from `in`; results go to `out`, diagnostics to `err`.
/// Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace wlev::cli
