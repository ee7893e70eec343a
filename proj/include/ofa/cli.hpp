#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ofa {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBoundViolation = 1;
inline constexpr int kExitUsage = 2;

/// Command-line entry: generate | run | sweep | cowpath | validate.
/// args excludes the program name.
int cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ofa
