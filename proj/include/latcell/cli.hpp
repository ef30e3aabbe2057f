// Batch front door. Exit codes: 0 computed/pass, 1 claim violated,
// 2 input or usage error.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latcell {

inline constexpr const char* kToolVersion = "latcell 0.1.0";

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latcell
