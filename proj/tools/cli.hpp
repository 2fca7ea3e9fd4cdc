#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace egr::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { ok = 0, not_egr = 1, usage_error = 2, internal_error = 3 };

// args[0] is the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace egr::cli
