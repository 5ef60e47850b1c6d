// Command-line front end. `run` takes the argument list (without the
// program name) and returns the process exit code: 0 on success, 1 on
// mathematical precondition failures, 2 on usage errors.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lsc {

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace lsc
