#ifndef OBNOX_CLI_HPP
#define OBNOX_CLI_HPP

#include <string>
#include <vector>

namespace obnox {

/// Exit codes: 0 solved / feasible, 1 usage or input error, 2 certified
/// infeasible at the given t, 3 enumeration cap exceeded.
int run_cli(const std::vector<std::string>& args);

}  // namespace obnox

#endif
