// Term input syntax for the reduce command: prefix applications f(a, b), the
// infix list operators | and @ (| binds tighter, both right-associative),
// integer/boolean/float/string literals, and declared constants.
#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "asn2cafe/cafe/ast.hpp"
#include "asn2cafe/cafe/signature.hpp"
#include "asn2cafe/diagnostic.hpp"

namespace asn2cafe::rewrite {

namespace detail {

struct TermToken {
  enum class Kind { Name, Number, Float, String, LParen, RParen, Comma, Bar, At, End };
  Kind kind = Kind::End;
  std::string text;
  Position pos;
};

inline Result<std::vector<TermToken>> lex_term(std::string_view text) {
  std::vector<TermToken> tokens;
  Position pos{1, 1};
  std::size_t i = 0;
  auto advance = [&](char c) {
    if (c == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(c);
      ++i;
      continue;
    }
    Position start = pos;
    auto single = [&](TermToken::Kind kind) {
      tokens.push_back({kind, std::string(1, c), start});
      advance(c);
      ++i;
    };
    if (c == '(') { single(TermToken::Kind::LParen); continue; }
    if (c == ')') { single(TermToken::Kind::RParen); continue; }
    if (c == ',') { single(TermToken::Kind::Comma); continue; }
    if (c == '|') { single(TermToken::Kind::Bar); continue; }
    if (c == '@') { single(TermToken::Kind::At); continue; }
    if (c == '"') {
      std::string s;
      advance(c);
      ++i;
      while (i < text.size() && text[i] != '"') {
        s.push_back(text[i]);
        advance(text[i]);
        ++i;
      }
      if (i >= text.size())
        return Result<std::vector<TermToken>>::failure(error_at(start, "unterminated string"));
      advance('"');
      ++i;
      tokens.push_back({TermToken::Kind::String, s, start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && i + 1 < text.size() &&
         std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::string num(1, c);
      advance(c);
      ++i;
      bool is_float = false;
      while (i < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.')) {
        if (text[i] == '.') {
          if (i + 1 < text.size() && text[i + 1] == '.') break;  // range, not ours
          is_float = true;
        }
        num.push_back(text[i]);
        advance(text[i]);
        ++i;
      }
      tokens.push_back({is_float ? TermToken::Kind::Float : TermToken::Kind::Number, num, start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '-' ||
              text[i] == '_' || text[i] == '?' || text[i] == '.')) {
        word.push_back(text[i]);
        advance(text[i]);
        ++i;
      }
      tokens.push_back({TermToken::Kind::Name, word, start});
      continue;
    }
    return Result<std::vector<TermToken>>::failure(
        error_at(start, std::string("unexpected character '") + c + "' in term"));
  }
  tokens.push_back({TermToken::Kind::End, "", pos});
  return Result<std::vector<TermToken>>::success(std::move(tokens));
}

class TermParser {
 public:
  TermParser(std::vector<TermToken> tokens, const cafe::Signature& sig)
      : tokens_(std::move(tokens)), sig_(sig) {}

  Result<cafe::Term> run() {
    auto term = parse_concat();
    if (!term.ok()) return term;
    if (peek().kind != TermToken::Kind::End)
      return fail(peek().pos, "unexpected trailing input '" + peek().text + "'");
    Diagnostics diags;
    std::string sort = check(*term, diags);
    (void)sort;
    if (has_errors(diags)) return Result<cafe::Term>::failure(std::move(diags));
    return term;
  }

 private:
  std::vector<TermToken> tokens_;
  const cafe::Signature& sig_;
  std::size_t at_ = 0;

  const TermToken& peek() const { return tokens_[at_]; }
  const TermToken& take() { return tokens_[at_ < tokens_.size() - 1 ? at_++ : at_]; }

  Result<cafe::Term> fail(Position pos, std::string message) {
    return Result<cafe::Term>::failure(error_at(pos, std::move(message)));
  }

  // concat := cons ("@" cons)*, right-associative, lowest precedence
  Result<cafe::Term> parse_concat() {
    auto left = parse_cons();
    if (!left.ok()) return left;
    if (peek().kind == TermToken::Kind::At) {
      take();
      auto right = parse_concat();
      if (!right.ok()) return right;
      return Result<cafe::Term>::success(
          cafe::Term::apply("_@_", {std::move(*left), std::move(*right)}));
    }
    return left;
  }

  // cons := atom ("|" cons)?
  Result<cafe::Term> parse_cons() {
    auto left = parse_atom();
    if (!left.ok()) return left;
    if (peek().kind == TermToken::Kind::Bar) {
      take();
      auto right = parse_cons();
      if (!right.ok()) return right;
      return Result<cafe::Term>::success(
          cafe::Term::apply("_|_", {std::move(*left), std::move(*right)}));
    }
    return left;
  }

  Result<cafe::Term> parse_atom() {
    const TermToken& t = peek();
    switch (t.kind) {
      case TermToken::Kind::Number: {
        std::int64_t v = std::stoll(take().text);
        return Result<cafe::Term>::success(cafe::Term::integer(v));
      }
      case TermToken::Kind::Float: {
        double v = std::stod(take().text);
        return Result<cafe::Term>::success(cafe::Term::floating(v));
      }
      case TermToken::Kind::String:
        return Result<cafe::Term>::success(cafe::Term::string(take().text));
      case TermToken::Kind::LParen: {
        take();
        auto inner = parse_concat();
        if (!inner.ok()) return inner;
        if (peek().kind != TermToken::Kind::RParen)
          return fail(peek().pos, "expected ')'");
        take();
        return inner;
      }
      case TermToken::Kind::Name: {
        Position pos = t.pos;
        std::string name = take().text;
        if (name == "true") return Result<cafe::Term>::success(cafe::Term::boolean(true));
        if (name == "false") return Result<cafe::Term>::success(cafe::Term::boolean(false));
        std::vector<cafe::Term> args;
        if (peek().kind == TermToken::Kind::LParen) {
          take();
          while (true) {
            auto arg = parse_concat();
            if (!arg.ok()) return arg;
            args.push_back(std::move(*arg));
            if (peek().kind == TermToken::Kind::Comma) {
              take();
              continue;
            }
            break;
          }
          if (peek().kind != TermToken::Kind::RParen)
            return fail(peek().pos, "expected ')' closing arguments of " + name);
          take();
        }
        if (!sig_.find_op(name))
          return fail(pos, "unknown operator " + name);
        return Result<cafe::Term>::success(cafe::Term::apply(name, std::move(args)));
      }
      default:
        return fail(t.pos, t.kind == TermToken::Kind::End
                               ? "unexpected end of term"
                               : "unexpected '" + t.text + "' in term");
    }
  }

  // Arity and sort checking against the signature.
  std::string check(const cafe::Term& term, Diagnostics& diags) {
    using K = cafe::Term::Kind;
    switch (term.kind) {
      case K::IntLit: return sig_.int_sort;
      case K::BoolLit: return sig_.bool_sort;
      case K::FloatLit: return sig_.float_sort;
      case K::StrLit: return sig_.string_sort;
      case K::Var: return term.sort;
      case K::Apply: break;
    }
    const cafe::OpDecl* op = sig_.find_op(term.name);
    if (!op) {
      diags.push_back(error_at({1, 1}, "unknown operator " + term.name));
      return "";
    }
    if (op->arg_sorts.size() != term.args.size()) {
      diags.push_back(error_at({1, 1}, "operator " + term.name + " expects " +
                                           std::to_string(op->arg_sorts.size()) +
                                           " arguments, got " +
                                           std::to_string(term.args.size())));
      return op->result_sort;
    }
    for (std::size_t i = 0; i < term.args.size(); ++i) {
      std::string got = check(term.args[i], diags);
      if (!got.empty() && !sig_.comparable(got, op->arg_sorts[i]))
        diags.push_back(error_at({1, 1}, "argument " + std::to_string(i + 1) + " of " +
                                             term.name + " has sort " + got + ", expected " +
                                             op->arg_sorts[i]));
    }
    return op->result_sort;
  }
};

}  // namespace detail

inline Result<cafe::Term> parse_term(std::string_view text, const cafe::Signature& signature) {
  auto tokens = detail::lex_term(text);
  if (!tokens.ok()) return Result<cafe::Term>::failure(std::move(tokens.diagnostics));
  return detail::TermParser(std::move(*tokens), signature).run();
}

}  // namespace asn2cafe::rewrite
