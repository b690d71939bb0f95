#ifndef HARVEST_TOOLS_CLI_HPP_
#define HARVEST_TOOLS_CLI_HPP_

#include <iosfwd>

namespace harvest::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;    // usage, parse, validation
inline constexpr int kExitComputeError = 2;  // e.g. enumeration cap exceeded

// Runs the `ht` command line. argv[0] is the program name.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace harvest::cli

#endif  // HARVEST_TOOLS_CLI_HPP_
