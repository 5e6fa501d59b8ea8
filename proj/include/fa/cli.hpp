#ifndef FA_CLI_HPP
#define FA_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fa::cli {

/// Exit codes: verdict-bearing commands return 0 on accept and 1 on reject;
/// any usage, parse or validation problem returns 2.
inline constexpr int exit_accept = 0;
inline constexpr int exit_reject = 1;
inline constexpr int exit_error = 2;

/// Resolves FA_COLOR ("always", "never"; anything else means auto).
bool use_color(std::optional<std::string_view> fa_color, bool stdout_is_tty);

/// Runs `fa <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool color = false);

} // namespace fa::cli

#endif
