#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace brq {

/// Runs `brq` with the given arguments (without the program name); returns
/// the exit status: 0 on success, 2 on domain errors, 3 on size limits.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brq
