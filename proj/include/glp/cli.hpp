#ifndef GLP_CLI_HPP
#define GLP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace glp::cli {

// Runs one command line; exit code 0 when all checks pass, 1 when some check
// fails, 2 on usage or input errors.  The CLI is a thin adapter over the
// library calls, so tests can drive it directly.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace glp::cli

#endif
