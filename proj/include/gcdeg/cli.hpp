#ifndef GCDEG_CLI_HPP
#define GCDEG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gcdeg::cli {

// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

/// Subcommands: classify, verify, minset, translate, census, table.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

/// Same, with argv[0] omitted.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gcdeg::cli

#endif  // GCDEG_CLI_HPP
