#ifndef MARKOVDYN_TOOLS_CLI_HPP_
#define MARKOVDYN_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "markovdyn/seqspace.hpp"

namespace markovdyn::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 2, kUndeterminedError = 3 };

// Runs one subcommand. `args` excludes the program name. The report goes to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "3", "-0.5", "1+2i", "0.5-0.25i", "2i".
Complex parse_complex(std::string_view text);

// "e3" or a comma list of complex literals with an optional "@offset".
FinSeq parse_vector(std::string_view text, Lattice lattice);

}  // namespace markovdyn::cli

#endif  // MARKOVDYN_TOOLS_CLI_HPP_
