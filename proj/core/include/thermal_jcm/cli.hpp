#pragma once

#include <string>
#include <vector>

// Command-line surface. Subcommands: inversion, sweep-theta, period,
// spectrum, gap, short-time, verify, oracle-compare, reproduce.
// Exit codes: 0 success, 1 domain/usage error, 2 guard or verification
// failure.

namespace tjcm::cli {

int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

}  // namespace tjcm::cli
