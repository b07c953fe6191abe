#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lsrs::cli {

enum ExitCode { ok = 0, input_error = 2, guard_exceeded = 3, internal_error = 4 };

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lsrs::cli
