#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hnpoly::cli {

/// Runs one CLI invocation. args excludes the program name. Returns the
/// process exit status: 0 on success, 1 on parse or domain errors, 2 when a
/// verification sweep reports violations.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hnpoly::cli
