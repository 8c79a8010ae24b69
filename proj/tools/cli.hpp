#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asimkit::cli {

// Runs one asimkit invocation. args excludes the program name. Returns the
// process exit code: 0 success/pass/true, 1 a negative but valid result,
// 2 usage, parse or data errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace asimkit::cli
