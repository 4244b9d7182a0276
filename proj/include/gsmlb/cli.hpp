#ifndef GSMLB_CLI_HPP
#define GSMLB_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace gsmlb {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int internal = 1;
inline constexpr int usage = 2;
}  // namespace exit_code

/// Parses `start:stop:step` into the inclusive ascending level list.
/// Throws ConfigError (key "range") on malformed or descending specs.
std::vector<std::size_t> parse_range_spec(const std::string& spec);

/// Entry point for the `gsmlb` tool. `args` excludes the program name.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gsmlb

#endif  // GSMLB_CLI_HPP
