#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wordhom::cli {

/// Parses `args` (without the program name), runs the subcommand and returns
/// the process exit status: 0 ok, 1 verification failed, 2 invalid input,
/// 3 resource limit. Results go to `out`, error objects to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wordhom::cli
