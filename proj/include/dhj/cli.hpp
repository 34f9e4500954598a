#pragma once

// Command-line front end. Exit codes: 0 success or found; 3 a valid negative
// answer (not found, exhausted, undetermined); 2 usage or input error;
// 1 failed verification or internal error.

#include <iosfwd>
#include <string>
#include <vector>

namespace dhj::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_negative = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dhj::cli
