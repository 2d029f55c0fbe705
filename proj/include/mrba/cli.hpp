#ifndef MRBA_CLI_HPP
#define MRBA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mrba {

enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2 };

// Runs one command line (args excludes the program name) and returns the
// process exit status: 0 on success / all suites passing, 1 when a suite
// fails, 2 on usage, parse or constraint errors.
//
//   eval EXPR | coprod EXPR | counit EXPR | antipode EXPR | deg EXPR
//   check --suite NAME
//
// Shared flags: --lambda p/q, --kappa p/q, --alphabet a,b, --generator
// trivial|free, --format text|json, --seed N, --cases N, --max-depth N,
// --max-degree N.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mrba

#endif
