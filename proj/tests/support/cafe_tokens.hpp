// Token-level comparison helpers for generated CafeOBJ text. Whitespace and
// comments are not contractual; tokens are.
#pragma once

#include <cctype>
#include <string>
#include <vector>

namespace support {

inline std::vector<std::string> cafe_tokens(const std::string& text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  auto word_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '?';
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      tokens.push_back("->");
      i += 2;
      continue;
    }
    if (word_char(c) && !(c == '-')) {
      std::string word;
      while (i < text.size() && word_char(text[i])) {
        word.push_back(text[i]);
        ++i;
      }
      tokens.push_back(word);
      continue;
    }
    tokens.push_back(std::string(1, c));
    ++i;
  }
  return tokens;
}

inline std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) lines.push_back(current);
  return lines;
}

// True when some line of `text` tokenizes exactly like `expected_line`.
inline bool has_token_line(const std::string& text, const std::string& expected_line) {
  auto expected = cafe_tokens(expected_line);
  for (const auto& line : lines_of(text))
    if (cafe_tokens(line) == expected) return true;
  return false;
}

}  // namespace support
