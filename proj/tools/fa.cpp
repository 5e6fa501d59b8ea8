#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <unistd.h>

#include "fa/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::optional<std::string_view> fa_color;
    if (const char* env = std::getenv("FA_COLOR")) {
        fa_color = env;
    }
    const bool color = fa::cli::use_color(fa_color, isatty(STDOUT_FILENO) != 0);
    return fa::cli::run(args, std::cout, std::cerr, color);
}
