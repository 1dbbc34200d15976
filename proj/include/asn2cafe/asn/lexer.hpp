// Tokenizer for the ASN.1 subset. Keywords are matched exactly; apart from
// the character-string types (NumericString, PrintableString) they are all
// spelt in capitals, so "Integer" lexes as a type reference, not a keyword.
#pragma once

#include <array>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "asn2cafe/diagnostic.hpp"

namespace asn2cafe::asn {

struct Token {
  enum class Kind {
    Keyword,
    TypeRef,     // initial capital
    Identifier,  // initial lowercase
    Assign,      // ::=
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semicolon,
    Range,  // ..
    Number,
    EndOfInput,
  };

  Kind kind = Kind::EndOfInput;
  std::string text;
  Position pos;
};

namespace detail {

// Supported keywords plus reserved words we reject as unsupported constructs.
inline const std::array<std::string_view, 21>& keywords() {
  static const std::array<std::string_view, 21> kws = {
      "DEFINITIONS", "BEGIN", "END", "SEQUENCE", "SET", "CHOICE", "OF", "SIZE",
      "OPTIONAL", "IMPORTS", "EXPORTS", "FROM", "ALL", "INTEGER", "REAL", "BOOLEAN",
      "NumericString", "PrintableString", "ABSTRACT-SYNTAX", "IDENTIFIED", "BY"};
  return kws;
}

inline const std::array<std::string_view, 16>& reserved_unsupported() {
  static const std::array<std::string_view, 16> kws = {
      "ENUMERATED", "DEFAULT", "IMPLICIT", "EXPLICIT", "AUTOMATIC", "TAGS",
      "OBJECT", "IDENTIFIER", "OCTET", "BIT", "NULL", "ANY", "COMPONENTS",
      "DEFINED", "MAX", "MIN"};
  return kws;
}

inline bool is_keyword(std::string_view word) {
  for (auto k : keywords())
    if (k == word) return true;
  for (auto k : reserved_unsupported())
    if (k == word) return true;
  return false;
}

inline bool is_reserved_unsupported(std::string_view word) {
  for (auto k : reserved_unsupported())
    if (k == word) return true;
  return false;
}

inline bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-';
}

// Type references and identifiers: letters, digits, hyphens; no doubled or
// trailing hyphen.
inline bool valid_word(std::string_view w) {
  if (w.empty()) return false;
  if (w.back() == '-') return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == '-' && w[i - 1] == '-') return false;
  return true;
}

}  // namespace detail

inline Result<std::vector<Token>> tokenize(std::string_view source) {
  std::vector<Token> tokens;
  Diagnostics diags;
  Position pos{1, 1};

  auto advance = [&](char c) {
    if (c == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  };

  std::size_t i = 0;
  const std::size_t n = source.size();
  while (i < n) {
    char c = source[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(c);
      ++i;
      continue;
    }
    // "--" starts a comment that runs to end of line.
    if (c == '-' && i + 1 < n && source[i + 1] == '-') {
      while (i < n && source[i] != '\n') {
        advance(source[i]);
        ++i;
      }
      continue;
    }
    Position start = pos;
    if (c == ':' && i + 2 < n && source[i + 1] == ':' && source[i + 2] == '=') {
      tokens.push_back({Token::Kind::Assign, "::=", start});
      advance(c); advance(c); advance(c);
      i += 3;
      continue;
    }
    if (c == '.' && i + 1 < n && source[i + 1] == '.') {
      tokens.push_back({Token::Kind::Range, "..", start});
      advance(c); advance(c);
      i += 2;
      continue;
    }
    switch (c) {
      case '{': tokens.push_back({Token::Kind::LBrace, "{", start}); advance(c); ++i; continue;
      case '}': tokens.push_back({Token::Kind::RBrace, "}", start}); advance(c); ++i; continue;
      case '(': tokens.push_back({Token::Kind::LParen, "(", start}); advance(c); ++i; continue;
      case ')': tokens.push_back({Token::Kind::RParen, ")", start}); advance(c); ++i; continue;
      case '[': tokens.push_back({Token::Kind::LBracket, "[", start}); advance(c); ++i; continue;
      case ']': tokens.push_back({Token::Kind::RBracket, "]", start}); advance(c); ++i; continue;
      case ',': tokens.push_back({Token::Kind::Comma, ",", start}); advance(c); ++i; continue;
      case ';': tokens.push_back({Token::Kind::Semicolon, ";", start}); advance(c); ++i; continue;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (i < n && std::isdigit(static_cast<unsigned char>(source[i]))) {
        num.push_back(source[i]);
        advance(source[i]);
        ++i;
      }
      tokens.push_back({Token::Kind::Number, num, start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string word;
      while (i < n && detail::word_char(source[i])) {
        word.push_back(source[i]);
        advance(source[i]);
        ++i;
      }
      // A trailing hyphen belongs to the next token ("Payment-method" is one
      // word, but "Type- " is a malformed reference).
      if (!detail::valid_word(word)) {
        diags.push_back(error_at(start, "malformed name '" + word + "'"));
        return Result<std::vector<Token>>::failure(std::move(diags));
      }
      Token::Kind kind;
      if (detail::is_keyword(word))
        kind = Token::Kind::Keyword;
      else if (std::isupper(static_cast<unsigned char>(word[0])))
        kind = Token::Kind::TypeRef;
      else
        kind = Token::Kind::Identifier;
      tokens.push_back({kind, word, start});
      continue;
    }
    diags.push_back(error_at(start, std::string("illegal character '") + c + "'"));
    return Result<std::vector<Token>>::failure(std::move(diags));
  }
  tokens.push_back({Token::Kind::EndOfInput, "", pos});
  return Result<std::vector<Token>>::success(std::move(tokens), std::move(diags));
}

}  // namespace asn2cafe::asn
