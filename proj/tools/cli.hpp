#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torgr::cli {

enum Exit { ok = 0, invalid_input = 1, resource_exceeded = 2, verification_failed = 3 };

/// Runs the command line; output goes to `out` unless --output is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace torgr::cli
