// Leftmost-innermost reduction with declaration-order rule selection, an
// approximation of CafeOBJ's red command that is deterministic by
// construction. Builtins evaluate +, -, <, >=, ==, and, or, not on literal
// arguments; if_then_else_fi evaluates its condition first and never touches
// the dead branch, which the recursive equations (mkl) rely on. == on ground
// constructor terms is structural equality after both sides are reduced.
#pragma once

#include <cassert>
#include <map>
#include <optional>
#include <string>

#include "asn2cafe/rewrite/system.hpp"

namespace asn2cafe::rewrite {

namespace detail {

using cafe::Term;

inline bool is_literal(const Term& t) {
  return t.kind == Term::Kind::IntLit || t.kind == Term::Kind::BoolLit ||
         t.kind == Term::Kind::FloatLit || t.kind == Term::Kind::StrLit;
}

inline std::string sort_of(const Term& t, const cafe::Signature& sig) {
  switch (t.kind) {
    case Term::Kind::IntLit: return sig.int_sort;
    case Term::Kind::BoolLit: return sig.bool_sort;
    case Term::Kind::FloatLit: return sig.float_sort;
    case Term::Kind::StrLit: return sig.string_sort;
    case Term::Kind::Var: return t.sort;
    case Term::Kind::Apply: break;
  }
  if (const cafe::OpDecl* op = sig.find_op(t.name)) return op->result_sort;
  // Builtin operators that a signature does not declare.
  if (t.name == "_+_" || t.name == "_-_") return sig.int_sort;
  if (t.name == "_<_" || t.name == "_>=_" || t.name == "_==_" || t.name == "_and_" ||
      t.name == "_or_" || t.name == "not_")
    return sig.bool_sort;
  if (t.name == "if_then_else_fi" && !t.args.empty())
    return sort_of(t.args[1], sig);
  return "";
}

struct Reducer {
  // Nesting guard: terms growing past this depth are treated like a blown
  // step budget rather than exhausting the call stack.
  static constexpr std::size_t max_depth = 5000;

  const RewriteSystem& system;
  std::size_t limit;
  std::size_t steps = 0;
  std::size_t depth = 0;
  bool exceeded = false;

  bool step() {
    if (steps >= limit) {
      exceeded = true;
      return false;
    }
    ++steps;
    return true;
  }

  bool match(const Term& pattern, const Term& term, std::map<std::string, Term>& binding) {
    switch (pattern.kind) {
      case Term::Kind::Var: {
        std::string term_sort = sort_of(term, system.signature);
        bool fits = system.signature.sort_leq(term_sort, pattern.sort) ||
                    (is_literal(term) && system.signature.comparable(term_sort, pattern.sort));
        if (!fits) return false;
        auto it = binding.find(pattern.name);
        if (it != binding.end()) return it->second == term;
        binding.emplace(pattern.name, term);
        return true;
      }
      case Term::Kind::Apply: {
        if (term.kind != Term::Kind::Apply || term.name != pattern.name ||
            term.args.size() != pattern.args.size())
          return false;
        for (std::size_t i = 0; i < pattern.args.size(); ++i)
          if (!match(pattern.args[i], term.args[i], binding)) return false;
        return true;
      }
      default:
        return pattern == term;
    }
  }

  Term substitute(const Term& rhs, const std::map<std::string, Term>& binding) {
    if (rhs.kind == Term::Kind::Var) {
      auto it = binding.find(rhs.name);
      return it == binding.end() ? rhs : it->second;
    }
    Term out = rhs;
    for (auto& arg : out.args) arg = substitute(arg, binding);
    return out;
  }

  std::optional<Term> eval_builtin(const Term& t) {
    using K = Term::Kind;
    const auto& a = t.args;
    auto num2 = [&](auto f) -> std::optional<Term> {
      if (a[0].kind == K::IntLit && a[1].kind == K::IntLit)
        return f(a[0].int_value, a[1].int_value);
      if (a[0].kind == K::FloatLit && a[1].kind == K::FloatLit)
        return f(a[0].float_value, a[1].float_value);
      return std::nullopt;
    };
    if (a.size() == 2 && t.name == "_+_")
      return num2([](auto x, auto y) {
        if constexpr (std::is_same_v<decltype(x), double>) return Term::floating(x + y);
        else return Term::integer(x + y);
      });
    if (a.size() == 2 && t.name == "_-_")
      return num2([](auto x, auto y) {
        if constexpr (std::is_same_v<decltype(x), double>) return Term::floating(x - y);
        else return Term::integer(x - y);
      });
    if (a.size() == 2 && t.name == "_<_")
      return num2([](auto x, auto y) { return Term::boolean(x < y); });
    if (a.size() == 2 && t.name == "_>=_")
      return num2([](auto x, auto y) { return Term::boolean(x >= y); });
    if (a.size() == 2 && t.name == "_==_") {
      if (ground(a[0]) && ground(a[1])) return Term::boolean(a[0] == a[1]);
      return std::nullopt;
    }
    if (a.size() == 2 && t.name == "_and_" && a[0].kind == K::BoolLit &&
        a[1].kind == K::BoolLit)
      return Term::boolean(a[0].bool_value && a[1].bool_value);
    if (a.size() == 2 && t.name == "_or_" && a[0].kind == K::BoolLit && a[1].kind == K::BoolLit)
      return Term::boolean(a[0].bool_value || a[1].bool_value);
    if (a.size() == 1 && t.name == "not_" && a[0].kind == K::BoolLit)
      return Term::boolean(!a[0].bool_value);
    return std::nullopt;
  }

  static bool ground(const Term& t) {
    if (t.kind == Term::Kind::Var) return false;
    for (const auto& arg : t.args)
      if (!ground(arg)) return false;
    return true;
  }

  // Top-level rewriting loops rather than recurses, so a long rewrite chain
  // only costs stack proportional to the term's structural depth.
  Term normalize(const Term& input) {
    struct DepthGuard {
      Reducer& r;
      explicit DepthGuard(Reducer& reducer) : r(reducer) {
        if (++r.depth > max_depth) r.exceeded = true;
      }
      ~DepthGuard() { --r.depth; }
    } guard(*this);

    Term current = input;
    while (!exceeded) {
      if (current.kind != Term::Kind::Apply) return current;

      // Condition-first conditional; the dead branch is never reduced.
      if (current.name == "if_then_else_fi" && current.args.size() == 3) {
        Term cond = normalize(current.args[0]);
        if (exceeded) return current;
        if (cond.kind == Term::Kind::BoolLit) {
          if (!step()) return current;
          Term branch = cond.bool_value ? std::move(current.args[1]) : std::move(current.args[2]);
          current = std::move(branch);
          continue;
        }
        current.args[0] = std::move(cond);
        current.args[1] = normalize(current.args[1]);
        current.args[2] = normalize(current.args[2]);
        return current;
      }

      for (auto& arg : current.args) {
        arg = normalize(arg);
        if (exceeded) return current;
      }

      if (auto value = eval_builtin(current)) {
        if (!step()) return current;
        current = std::move(*value);
        continue;
      }

      bool rewritten = false;
      for (const auto& rule : system.rules) {
        std::map<std::string, Term> binding;
        if (!match(rule.lhs, current, binding)) continue;
        if (rule.conditional()) {
          Term cond = normalize(substitute(*rule.condition, binding));
          if (exceeded) return current;
          if (!(cond.kind == Term::Kind::BoolLit && cond.bool_value)) continue;
        }
        if (!step()) return current;
        // Step-trace validation: the redex must be the lhs instance under the
        // binding the matcher produced.
        assert(substitute(rule.lhs, binding) == current);
        current = substitute(rule.rhs, binding);
        rewritten = true;
        break;
      }
      if (!rewritten) return current;
    }
    return current;
  }
};

}  // namespace detail

inline ReduceResult reduce(const cafe::Term& term, const RewriteSystem& system,
                           std::size_t step_limit = default_step_limit) {
  detail::Reducer reducer{system, step_limit};
  ReduceResult result;
  result.normal_form = reducer.normalize(term);
  result.steps = reducer.steps;
  result.status = reducer.exceeded ? ReduceResult::Status::StepLimitExceeded
                                   : ReduceResult::Status::Normal;
  return result;
}

}  // namespace asn2cafe::rewrite
