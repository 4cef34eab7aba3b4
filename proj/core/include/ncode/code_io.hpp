#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ncode/code.hpp"

namespace ncode {

/// Parses the line-oriented code format.
///
///   # comment
///   n=5            optional header, required before any index-list line
///   01101          bit string c_1..c_n (all 0/1, length n)
///   2 3 5          space-separated 1-based neuron indices
///   -              the empty codeword
///
/// Without a header every codeword must be a bit string and n is taken from
/// the first one. With a header, a line is read as a bit string only when it
/// is made of 0/1 characters and has length exactly n; anything else is an
/// index list. Duplicates are rejected, not merged. Throws ParseError.
Code parse_code_text(std::string_view text);

/// Renders a code in the text format (header plus one bit string per line).
std::string format_code_text(const Code& code);

/// JSON mirror: { "n": int, "words": [[int, ...], ...] } with 1-based indices.
nlohmann::json code_to_json(const Code& code);
Code code_from_json(const nlohmann::json& j);

/// Reads a code file, choosing JSON when the first non-blank character is '{'.
Code read_code_file(const std::filesystem::path& path);

/// Support-notation shorthand used in fixtures and tests: whitespace-separated
/// tokens, each a run of neuron digits ("123" = {1,2,3}) or "-" for the empty
/// word. Only valid for n <= 9.
Code parse_compact(int n, std::string_view words);

/// Reads a whole file into a string; throws ParseError when unreadable.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace ncode
