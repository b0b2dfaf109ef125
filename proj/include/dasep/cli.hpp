#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dasep::cli {

/// Exit codes: 0 success, 1 verification failure or runtime error, 2 usage error.
enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

int run(int argc, char** argv);
/// Same as run() with the arguments after the program name and explicit streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dasep::cli
