#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fusionkit::cli {

/// Run one CLI invocation (args excludes the program name). Output goes to
/// the given streams. Returns the process exit code: 0 full pass, 1 check
/// failure, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fusionkit::cli
