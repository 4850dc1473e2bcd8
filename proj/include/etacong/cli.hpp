#ifndef ETACONG_CLI_HPP
#define ETACONG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace etacong
{

// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_verdict_false = 1,
    exit_usage = 2,
};

// Runs the command line args (args[0] is the program name). Reports go to
// out, diagnostics to err.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace etacong

#endif
