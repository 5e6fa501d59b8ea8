#ifndef FA_MACHINE_FILE_HPP
#define FA_MACHINE_FILE_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "fa/core.hpp"

namespace fa {

// Machine files are JSON objects:
//
//   {
//     "kind": "ndfa",
//     "states": ["S", "A"],
//     "sigma": ["a", "b"],
//     "start": "S",
//     "finals": ["A"],
//     "rules": [["S", "a", "A"], ["A", "EMP", "S"]]
//   }
//
// "kind" is "dfa" or "ndfa"; a dfa may add "no_dead": true when its rules
// are already a total function. Errors are reported as fa::Error whose
// message starts with "<source>:<line>:".

Machine parse_machine_text(std::string_view text, std::string_view source = "<input>");
Machine parse_machine_file(const std::filesystem::path& path);

/// Serializes `machine` so that parse_machine_text() gives it back unchanged.
std::string machine_to_json(const Machine& machine);

/// Line (1-based) of the value addressed by a JSON pointer such as
/// "/rules/3", or nullopt if the pointer does not resolve.
std::optional<std::size_t> locate_line(std::string_view text, std::string_view pointer);

/// Words are whitespace separated symbols; "EMP" or nothing is the empty word.
Word parse_word(std::span<const std::string> args);

} // namespace fa

#endif
