#ifndef TREEIDEAL_CLI_HPP
#define TREEIDEAL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace treeideal {

// Runs one command. Results go to `out`, diagnostics to `err`. Returns the
// process exit code: 0 success or witness found, 1 negative result or
// violation reported, 2 malformed input or capacity guard.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace treeideal

#endif
