#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace autorecon::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, input_error = 2 };

/// Runs one `autorecon` invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace autorecon::cli
