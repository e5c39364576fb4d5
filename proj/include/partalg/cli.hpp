#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace partalg {

// Runs the command-line interface on args (program name excluded). All
// output goes to the given streams; `in` feeds operands passed as "-".
// Returns the process exit status: 0 success, 1 failed verification,
// 2 usage or input error.
int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err,
            std::istream& in);

// Overload reading "-" operands from std::cin.
int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace partalg
