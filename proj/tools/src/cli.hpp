#ifndef STIRLINGKIT_TOOLS_CLI_HPP
#define STIRLINGKIT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <stirlingkit/exact.hpp>

namespace stirlingkit::cli
{

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. Results go to out, diagnostics to err;
// transform reads its array from in when no input file is given.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

// "p/q", an integer, or a decimal such as "1e-12" or "0.25", read exactly.
Rational parse_rational_arg(std::string_view text);

} // namespace stirlingkit::cli

#endif
