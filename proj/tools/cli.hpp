#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ppair::cli {

/// Runs one command line (program name excluded). Exit codes: 0 proven or
/// witness found, 1 unresolved / not proven / violations, 2 bad input or
/// budget exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ppair::cli
