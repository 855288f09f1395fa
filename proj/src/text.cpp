#include "redinv/text.hpp"

#include <charconv>
#include <stdexcept>

namespace redinv {

std::string join_ints(std::span<const int> values, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(values[k]);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<int> parse_int_list(std::string_view text, char sep) {
  std::vector<int> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto end = text.find(sep, start);
    const auto token = trim(text.substr(start, end == std::string_view::npos ? text.npos : end - start));
    int value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc() || ptr != last)
      throw std::invalid_argument("malformed integer '" + std::string(token) + "' in '" +
                                  std::string(text) + "'");
    out.push_back(value);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace redinv
