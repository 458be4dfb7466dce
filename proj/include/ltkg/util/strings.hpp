#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ltkg::util {

std::string trim(std::string_view s);
std::string lower_ascii(std::string_view s);

// Splits on a literal separator; keeps empty fields.
std::vector<std::string> split(std::string_view s, std::string_view sep);

// Splits into lines on '\n' (a trailing '\r' is stripped from each line).
std::vector<std::string> split_lines(std::string_view s);

bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

// RFC 3986 percent-encoding of everything outside the unreserved set.
std::string url_encode(std::string_view s);

// Replaces every occurrence of `from` with `to`.
std::string replace_all(std::string_view s, std::string_view from, std::string_view to);

// Whitespace-splitting tokenizer. Drops empty tokens.
std::vector<std::string> whitespace_tokens(std::string_view s);

}  // namespace ltkg::util
