#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace aqsspm {

/// Entry point of the `aqsspm` tool. `args` excludes the program name.
/// Returns the process exit status; every failure prints exactly one line
/// `error: E_CODE: message` to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aqsspm
