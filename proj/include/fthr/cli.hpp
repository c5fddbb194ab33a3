#ifndef FTHR_CLI_HPP
#define FTHR_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace fthr {

inline constexpr const char* tool_version = "0.1.0";

// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view data) noexcept;

// Exit codes: 0 ok, 1 error, 2 a checked relation was violated.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace fthr

#endif // FTHR_CLI_HPP
