#ifndef WMORSE_CLI_HPP
#define WMORSE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace wmorse
{

/// Exit codes of the command line tool.
enum ExitCode : int
{
    kExitOk = 0,
    kExitInputError = 2,
    kExitHypothesisFailed = 3,
};

/**
 * Entry point of the `wmorse` tool: subcommands homology, collapse, morse and
 * sequence. `args` excludes the program name. Reads WMORSE_MAX_DIM.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wmorse

#endif // WMORSE_CLI_HPP
