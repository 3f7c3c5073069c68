#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace secmimo {

/// Default seed for every subcommand so unseeded runs are reproducible.
inline constexpr unsigned long long kDefaultSeed = 0x5eed5eedULL;

/// Runs the command line (without argv[0]) and returns the process exit
/// code: 0 success, 1 usage error, 2 invalid config/arguments, 3
/// unsupported parameter regime.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace secmimo
