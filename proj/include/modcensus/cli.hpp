#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modcensus::cli {

/// Runs one CLI invocation. args excludes the program name. Results go to
/// out as JSON lines or CSV; diagnostics go to err. Returns 0 on success,
/// 1 on computational errors (budget, precision, overflow, bracket failure,
/// or a verify mismatch), 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace modcensus::cli
