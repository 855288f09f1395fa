#pragma once

// Small helpers shared by the text serializations.

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace redinv {

std::string join_ints(std::span<const int> values, std::string_view sep);

/// Parses `sep`-separated integers, tolerating surrounding whitespace.
/// An empty (or all-whitespace) string yields an empty list.
/// Throws std::invalid_argument on anything else that is not an integer.
std::vector<int> parse_int_list(std::string_view text, char sep);

std::string_view trim(std::string_view s);

}  // namespace redinv
