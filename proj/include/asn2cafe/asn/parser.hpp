// Recursive-descent parser for the ASN.1 subset. One token of lookahead is
// enough for the whole grammar. Top-level files may either carry a
// "Name DEFINITIONS ::= BEGIN ... END" wrapper or consist of bare type
// assignments, in which case the module name is synthesized from the caller
// (usually the file stem).
#pragma once

#include <set>
#include <string>
#include <vector>

#include "asn2cafe/asn/ast.hpp"
#include "asn2cafe/asn/lexer.hpp"

namespace asn2cafe::asn {

namespace detail {

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string fallback_name)
      : tokens_(std::move(tokens)), fallback_name_(std::move(fallback_name)) {}

  Result<AsnModule> run() {
    AsnModule module;
    if (peek().kind == Token::Kind::EndOfInput) {
      module.name = fallback_name_;
      module.bare = true;
      return finish(std::move(module));
    }
    // "Name DEFINITIONS [{...}] ::= BEGIN ... END" or bare assignments.
    if ((peek().kind == Token::Kind::TypeRef || peek().kind == Token::Kind::Identifier) &&
        peek(1).kind == Token::Kind::Keyword && peek(1).text == "DEFINITIONS") {
      module.name = take().text;
      take();  // DEFINITIONS
      if (peek().kind == Token::Kind::LBrace) skip_braced_arguments();
      if (!expect(Token::Kind::Assign, "'::=' after DEFINITIONS")) return fail();
      if (!expect_keyword("BEGIN")) return fail();
      parse_module_body(module, /*wrapped=*/true);
      if (!failed_ && !expect_keyword("END")) return fail();
    } else {
      module.name = fallback_name_;
      module.bare = true;
      parse_module_body(module, /*wrapped=*/false);
      if (!failed_ && peek().kind != Token::Kind::EndOfInput) {
        error(peek().pos, "unexpected token '" + peek().text + "'");
      }
    }
    if (failed_) return fail();
    return finish(std::move(module));
  }

 private:
  std::vector<Token> tokens_;
  std::string fallback_name_;
  std::size_t at_ = 0;
  Diagnostics diags_;
  bool failed_ = false;

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = at_ + ahead;
    if (i >= tokens_.size()) i = tokens_.size() - 1;
    return tokens_[i];
  }
  const Token& take() { return tokens_[at_ < tokens_.size() - 1 ? at_++ : at_]; }

  void error(Position pos, std::string message) {
    diags_.push_back(error_at(pos, std::move(message)));
    failed_ = true;
  }
  Result<AsnModule> fail() { return Result<AsnModule>::failure(std::move(diags_)); }
  Result<AsnModule> finish(AsnModule module) {
    return Result<AsnModule>::success(std::move(module), std::move(diags_));
  }

  bool at_end() const { return peek().kind == Token::Kind::EndOfInput; }

  bool expect(Token::Kind kind, const std::string& what) {
    if (peek().kind == kind) {
      take();
      return true;
    }
    if (at_end())
      error(peek().pos, "unexpected end of input, expected " + what);
    else
      error(peek().pos, "expected " + what + ", found '" + peek().text + "'");
    return false;
  }

  bool expect_keyword(const std::string& word) {
    if (peek().kind == Token::Kind::Keyword && peek().text == word) {
      take();
      return true;
    }
    if (at_end())
      error(peek().pos, "unexpected end of input, expected '" + word + "'");
    else
      error(peek().pos, "expected '" + word + "', found '" + peek().text + "'");
    return false;
  }

  bool keyword_ahead(const std::string& word, std::size_t ahead = 0) const {
    return peek(ahead).kind == Token::Kind::Keyword && peek(ahead).text == word;
  }

  void skip_braced_arguments() {
    take();  // {
    int depth = 1;
    while (!at_end() && depth > 0) {
      if (peek().kind == Token::Kind::LBrace) ++depth;
      if (peek().kind == Token::Kind::RBrace) --depth;
      take();
    }
  }

  void parse_module_body(AsnModule& module, bool wrapped) {
    if (keyword_ahead("EXPORTS")) parse_exports(module);
    if (failed_) return;
    if (keyword_ahead("IMPORTS")) parse_imports(module);
    if (failed_) return;

    std::set<std::string> seen;
    while (!failed_ && !at_end() && !(wrapped && keyword_ahead("END"))) {
      if (peek().kind == Token::Kind::Identifier) {
        // "name ABSTRACT-SYNTAX ::= { Top IDENTIFIED BY ... }" or a value
        // assignment, which the subset rejects.
        if (keyword_ahead("ABSTRACT-SYNTAX", 1)) {
          parse_abstract_syntax(module);
          continue;
        }
        error(peek().pos, "unsupported construct: value assignment '" + peek().text + "'");
        return;
      }
      if (peek().kind != Token::Kind::TypeRef) {
        error(peek().pos, "expected type assignment, found '" + peek().text + "'");
        return;
      }
      if (peek(1).kind == Token::Kind::LBrace) {
        error(peek().pos, "unsupported construct: parameterized type '" + peek().text + "'");
        return;
      }
      AsnTypeAssignment assignment;
      assignment.name = peek().text;
      assignment.source_position = peek().pos;
      take();
      if (!expect(Token::Kind::Assign, "'::='")) return;
      assignment.body = parse_type();
      if (failed_) return;
      if (!seen.insert(assignment.name).second) {
        error(assignment.source_position, "duplicate type name '" + assignment.name + "'");
        return;
      }
      module.assignments.push_back(std::move(assignment));
    }
    if (wrapped && at_end() && !failed_) {
      error(peek().pos, "unexpected end of input, expected 'END'");
    }
  }

  void parse_exports(AsnModule& module) {
    Position pos = peek().pos;
    take();  // EXPORTS
    if (peek().kind == Token::Kind::Semicolon) {
      take();
      module.exports.kind = ExportClause::Kind::None;
      diags_.push_back(warning_at(pos, "'EXPORTS ;' makes nothing exportable from this module"));
      return;
    }
    if (keyword_ahead("ALL")) {
      take();
      module.exports.kind = ExportClause::Kind::All;
      expect(Token::Kind::Semicolon, "';' after EXPORTS ALL");
      return;
    }
    module.exports.kind = ExportClause::Kind::Names;
    while (true) {
      if (peek().kind != Token::Kind::TypeRef) {
        error(peek().pos, "expected exported type name");
        return;
      }
      module.exports.names.push_back(take().text);
      if (peek().kind == Token::Kind::Comma) {
        take();
        continue;
      }
      break;
    }
    expect(Token::Kind::Semicolon, "';' after EXPORTS list");
  }

  void parse_imports(AsnModule& module) {
    take();  // IMPORTS
    while (!failed_) {
      ImportGroup group;
      while (true) {
        if (peek().kind != Token::Kind::TypeRef) {
          error(peek().pos, "expected imported type name");
          return;
        }
        group.names.push_back(take().text);
        if (peek().kind == Token::Kind::Comma) {
          take();
          continue;
        }
        break;
      }
      if (!expect_keyword("FROM")) return;
      if (peek().kind != Token::Kind::TypeRef && peek().kind != Token::Kind::Identifier) {
        error(peek().pos, "expected source module name after FROM");
        return;
      }
      group.from_module = take().text;
      module.imports.push_back(std::move(group));
      if (peek().kind == Token::Kind::Semicolon) {
        take();
        return;
      }
      if (peek().kind != Token::Kind::TypeRef) {
        error(peek().pos, "expected ';' or another IMPORTS group");
        return;
      }
    }
  }

  void parse_abstract_syntax(AsnModule& module) {
    Position pos = peek().pos;
    take();  // name
    take();  // ABSTRACT-SYNTAX
    if (!expect(Token::Kind::Assign, "'::=' after ABSTRACT-SYNTAX")) return;
    if (!expect(Token::Kind::LBrace, "'{'")) return;
    if (peek().kind != Token::Kind::TypeRef) {
      error(peek().pos, "expected top-level type name in ABSTRACT-SYNTAX");
      return;
    }
    if (module.abstract_syntax_top) {
      error(pos, "duplicate ABSTRACT-SYNTAX declaration");
      return;
    }
    module.abstract_syntax_top = take().text;
    if (!expect_keyword("IDENTIFIED")) return;
    if (!expect_keyword("BY")) return;
    if (peek().kind != Token::Kind::Identifier && peek().kind != Token::Kind::TypeRef &&
        peek().kind != Token::Kind::Number) {
      error(peek().pos, "expected identifier after IDENTIFIED BY");
      return;
    }
    take();
    expect(Token::Kind::RBrace, "'}' closing ABSTRACT-SYNTAX");
  }

  AsnTypePtr parse_type() {
    const Token& t = peek();
    if (t.kind == Token::Kind::LBracket) {
      error(t.pos, "unsupported construct: tag");
      return nullptr;
    }
    if (t.kind == Token::Kind::Keyword) {
      if (detail_is_unsupported(t.text)) {
        error(t.pos, "unsupported construct: " + t.text);
        return nullptr;
      }
      if (t.text == "SEQUENCE" || t.text == "SET") {
        bool is_set = t.text == "SET";
        take();
        if (keyword_ahead("OF")) {
          take();
          auto element = parse_type();
          if (failed_) return nullptr;
          return AsnType::make_list(
              is_set ? AsnType::Kind::SetOf : AsnType::Kind::SequenceOf, element);
        }
        return parse_field_block(is_set ? AsnType::Kind::Set : AsnType::Kind::Sequence);
      }
      if (t.text == "CHOICE") {
        take();
        return parse_field_block(AsnType::Kind::Choice);
      }
      if (t.text == "INTEGER") return parse_builtin(BuiltinKind::Integer);
      if (t.text == "REAL") return parse_builtin(BuiltinKind::Real);
      if (t.text == "BOOLEAN") return parse_builtin(BuiltinKind::Boolean);
      if (t.text == "NumericString") return parse_builtin(BuiltinKind::NumericString);
      if (t.text == "PrintableString") return parse_builtin(BuiltinKind::PrintableString);
      error(t.pos, "unexpected keyword '" + t.text + "' in type position");
      return nullptr;
    }
    if (t.kind == Token::Kind::TypeRef) {
      std::string name = take().text;
      return AsnType::make_reference(std::move(name));
    }
    if (at_end())
      error(t.pos, "unexpected end of input");
    else
      error(t.pos, "expected a type, found '" + t.text + "'");
    return nullptr;
  }

  static bool detail_is_unsupported(const std::string& word) {
    return detail::is_reserved_unsupported(word);
  }

  AsnTypePtr parse_builtin(BuiltinKind kind) {
    take();  // the keyword
    std::optional<SizeConstraint> size;
    if (peek().kind == Token::Kind::LParen) {
      size = parse_size_constraint();
      if (failed_) return nullptr;
    }
    return AsnType::make_builtin(kind, size);
  }

  std::optional<SizeConstraint> parse_size_constraint() {
    take();  // (
    if (!expect_keyword("SIZE")) return std::nullopt;
    if (!expect(Token::Kind::LParen, "'(' after SIZE")) return std::nullopt;
    if (peek().kind != Token::Kind::Number) {
      error(peek().pos, "expected a size bound");
      return std::nullopt;
    }
    SizeConstraint c;
    c.min = std::stoull(take().text);
    c.max = c.min;
    if (peek().kind == Token::Kind::Range) {
      take();
      if (peek().kind != Token::Kind::Number) {
        error(peek().pos, "expected upper size bound after '..'");
        return std::nullopt;
      }
      c.max = std::stoull(take().text);
    }
    if (c.min > c.max) {
      error(peek().pos, "size range lower bound exceeds upper bound");
      return std::nullopt;
    }
    if (!expect(Token::Kind::RParen, "')' closing SIZE bound")) return std::nullopt;
    if (!expect(Token::Kind::RParen, "')' closing constraint")) return std::nullopt;
    return c;
  }

  AsnTypePtr parse_field_block(AsnType::Kind kind) {
    if (!expect(Token::Kind::LBrace, "'{'")) return nullptr;
    std::vector<NamedField> fields;
    std::set<std::string> names;
    while (true) {
      if (peek().kind != Token::Kind::Identifier) {
        if (at_end())
          error(peek().pos, "unexpected end of input");
        else if (peek().kind == Token::Kind::TypeRef)
          error(peek().pos, "component name '" + peek().text + "' must start lowercase");
        else
          error(peek().pos, "expected component name, found '" + peek().text + "'");
        return nullptr;
      }
      NamedField field;
      Position field_pos = peek().pos;
      field.name = take().text;
      field.type = parse_type();
      if (failed_) return nullptr;
      if (keyword_ahead("OPTIONAL")) {
        if (kind == AsnType::Kind::Choice) {
          error(peek().pos, "OPTIONAL is not allowed on CHOICE alternatives");
          return nullptr;
        }
        take();
        field.optional = true;
      }
      if (keyword_ahead("DEFAULT")) {
        error(peek().pos, "unsupported construct: DEFAULT");
        return nullptr;
      }
      if (!names.insert(field.name).second) {
        error(field_pos, "duplicate component name '" + field.name + "'");
        return nullptr;
      }
      fields.push_back(std::move(field));
      if (peek().kind == Token::Kind::Comma) {
        take();
        continue;
      }
      break;
    }
    if (!expect(Token::Kind::RBrace, "'}'")) return nullptr;
    return AsnType::make_structured(kind, std::move(fields));
  }
};

}  // namespace detail

inline Result<AsnModule> parse_module(std::vector<Token> tokens,
                                      const std::string& fallback_name = "Schema") {
  return detail::Parser(std::move(tokens), fallback_name).run();
}

inline Result<AsnModule> parse_text(std::string_view source,
                                    const std::string& fallback_name = "Schema") {
  auto tokens = tokenize(source);
  if (!tokens.ok()) return Result<AsnModule>::failure(std::move(tokens.diagnostics));
  auto parsed = parse_module(std::move(*tokens), fallback_name);
  parsed.diagnostics.insert(parsed.diagnostics.begin(), tokens.diagnostics.begin(),
                            tokens.diagnostics.end());
  return parsed;
}

}  // namespace asn2cafe::asn
