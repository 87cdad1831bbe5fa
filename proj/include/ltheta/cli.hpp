#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ltheta {

// Runs the command-line tool in-process and returns the exit status:
// 0 success, 1 failed verification/evaluation, 2 usage error.
// The vector overload takes the arguments without the program name.
int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ltheta
