#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace kmtext {

// Locale-independent ASCII helpers; non-ASCII bytes are never letters or spaces.

constexpr bool ascii_is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}
constexpr bool ascii_is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
constexpr bool ascii_is_digit(char c) { return c >= '0' && c <= '9'; }
constexpr bool ascii_is_alnum(char c) { return ascii_is_alpha(c) || ascii_is_digit(c); }
constexpr char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

inline std::string ascii_lower_copy(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = ascii_lower(c);
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && ascii_is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && ascii_is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && ascii_is_space(s[i])) ++i;
    const std::size_t start = i;
    while (i < s.size() && !ascii_is_space(s[i])) ++i;
    if (i > start) parts.push_back(s.substr(start, i - start));
  }
  return parts;
}

/// Whitespace runs become one space; leading/trailing whitespace removed.
inline std::string collapse_whitespace(std::string_view s) {
  std::string out;
  for (const auto part : split_whitespace(s)) {
    if (!out.empty()) out.push_back(' ');
    out.append(part);
  }
  return out;
}

}  // namespace kmtext
