#include <catch2/catch_amalgamated.hpp>

#include "asn2cafe/asn/lexer.hpp"

using namespace asn2cafe;
using asn::Token;

namespace {

std::vector<Token> lex(const std::string& text) {
  auto result = asn::tokenize(text);
  REQUIRE(result.ok());
  auto tokens = *result;
  REQUIRE(tokens.back().kind == Token::Kind::EndOfInput);
  tokens.pop_back();
  return tokens;
}

}  // namespace

TEST_CASE("tokenize a constrained string alias") {
  auto tokens = lex("Date ::= NumericString (SIZE (8))");
  std::vector<std::pair<Token::Kind, std::string>> expected = {
      {Token::Kind::TypeRef, "Date"},    {Token::Kind::Assign, "::="},
      {Token::Kind::Keyword, "NumericString"}, {Token::Kind::LParen, "("},
      {Token::Kind::Keyword, "SIZE"},    {Token::Kind::LParen, "("},
      {Token::Kind::Number, "8"},        {Token::Kind::RParen, ")"},
      {Token::Kind::RParen, ")"},
  };
  REQUIRE(tokens.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(tokens[i].kind == expected[i].first);
    CHECK(tokens[i].text == expected[i].second);
  }
}

TEST_CASE("empty input has no tokens") { CHECK(lex("").empty()); }

TEST_CASE("line comments are discarded") {
  CHECK(lex("-- DDMMYYYY").empty());
  auto tokens = lex("A ::= INTEGER -- trailing\nB ::= REAL");
  REQUIRE(tokens.size() == 6);
  CHECK(tokens[3].text == "B");
  CHECK(tokens[3].pos.line == 2);
}

TEST_CASE("keywords are only recognized in their exact spelling") {
  auto tokens = lex("sequence Integer SEQUENCE");
  REQUIRE(tokens.size() == 3);
  CHECK(tokens[0].kind == Token::Kind::Identifier);
  CHECK(tokens[1].kind == Token::Kind::TypeRef);  // not the INTEGER keyword
  CHECK(tokens[2].kind == Token::Kind::Keyword);
}

TEST_CASE("hyphenated names stay single tokens") {
  auto tokens = lex("Payment-method ::= CHOICE");
  REQUIRE(tokens.size() == 3);
  CHECK(tokens[0].text == "Payment-method");
  CHECK(tokens[0].kind == Token::Kind::TypeRef);
}

TEST_CASE("illegal characters are reported with their position") {
  auto result = asn::tokenize("A ::= $");
  REQUIRE_FALSE(result.ok());
  REQUIRE(result.diagnostics.size() == 1);
  CHECK(result.diagnostics[0].severity == Severity::Error);
  CHECK(result.diagnostics[0].position.line == 1);
  CHECK(result.diagnostics[0].position.column == 7);
  CHECK(result.diagnostics[0].message.find('$') != std::string::npos);
}

TEST_CASE("token positions point at the lexeme") {
  std::string source = "Account ::= SEQUENCE {\n    iban Iban }";
  auto tokens = lex(source);
  for (const auto& token : tokens) {
    REQUIRE(token.pos.line >= 1);
    // Slice the source at the reported position and compare.
    std::size_t offset = 0;
    int line = 1;
    while (line < token.pos.line) {
      offset = source.find('\n', offset) + 1;
      ++line;
    }
    offset += static_cast<std::size_t>(token.pos.column - 1);
    CHECK(source.compare(offset, token.text.size(), token.text) == 0);
  }
}

TEST_CASE("doubled or trailing hyphens make a name malformed") {
  auto doubled = asn::tokenize("Bad--name ::= INTEGER");
  REQUIRE_FALSE(doubled.ok());
  CHECK(doubled.diagnostics[0].message.find("malformed name") != std::string::npos);
  auto trailing = asn::tokenize("Bad- ::= INTEGER");
  REQUIRE_FALSE(trailing.ok());
  CHECK(trailing.diagnostics[0].message.find("malformed name") != std::string::npos);
}

TEST_CASE("range token") {
  auto tokens = lex("(SIZE (1..30))");
  REQUIRE(tokens.size() == 8);
  CHECK(tokens[3].kind == Token::Kind::Number);
  CHECK(tokens[4].kind == Token::Kind::Range);
  CHECK(tokens[5].text == "30");
  CHECK(tokens[6].kind == Token::Kind::RParen);
}
