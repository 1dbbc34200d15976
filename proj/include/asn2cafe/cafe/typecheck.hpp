// Static checks over a CafeModule in its import environment: sort
// availability, operator arity/sort consistency of every equation term,
// lhs/rhs sort compatibility under the subsort relation, variable
// declarations, and left-to-right executability.
//
// One deliberate exception: the constructor identity equation
// "eq typename(a1, ..., an) = atypename ." has a lone variable of the
// constructor's result sort as its right-hand side. It is emitted for
// specification completeness and is not executable; it is accepted here and
// skipped by the rewrite engine at load time.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "asn2cafe/cafe/ast.hpp"
#include "asn2cafe/cafe/signature.hpp"
#include "asn2cafe/diagnostic.hpp"

namespace asn2cafe::cafe {

namespace detail {

inline void collect_vars(const Term& term, std::set<std::string>& names) {
  if (term.kind == Term::Kind::Var) names.insert(term.name);
  for (const auto& arg : term.args) collect_vars(arg, names);
}

inline bool is_constructor_identity(const Equation& eq) {
  if (eq.conditional()) return false;
  if (eq.rhs.kind != Term::Kind::Var) return false;
  if (eq.lhs.kind != Term::Kind::Apply || eq.lhs.args.empty()) return false;
  for (const auto& arg : eq.lhs.args)
    if (arg.kind != Term::Kind::Var) return false;
  std::set<std::string> lhs_vars;
  collect_vars(eq.lhs, lhs_vars);
  return !lhs_vars.count(eq.rhs.name);
}

struct TermChecker {
  const Signature& sig;
  const std::map<std::string, std::string>& declared_vars;
  Diagnostics& diags;
  std::string context;

  // Returns the term's sort, or "" after reporting a problem.
  std::string check(const Term& term) {
    switch (term.kind) {
      case Term::Kind::IntLit:
        return sig.int_sort;
      case Term::Kind::BoolLit:
        return sig.bool_sort;
      case Term::Kind::FloatLit:
        return sig.float_sort;
      case Term::Kind::StrLit:
        return sig.string_sort;
      case Term::Kind::Var: {
        auto it = declared_vars.find(term.name);
        if (it == declared_vars.end()) {
          diags.push_back(error_at({1, 1}, "variable " + term.name + " undeclared in equation" +
                                               context));
          return "";
        }
        if (!term.sort.empty() && term.sort != it->second) {
          diags.push_back(error_at({1, 1}, "variable " + term.name + " used at sort " +
                                               term.sort + " but declared " + it->second +
                                               context));
        }
        return it->second;
      }
      case Term::Kind::Apply:
        break;
    }
    if (auto builtin = check_builtin(term)) return *builtin;
    const OpDecl* op = sig.find_op(term.name);
    if (!op) {
      diags.push_back(error_at({1, 1}, "unknown operator " + term.name + context));
      for (const auto& arg : term.args) check(arg);
      return "";
    }
    if (op->arg_sorts.size() != term.args.size()) {
      diags.push_back(error_at({1, 1}, "operator " + term.name + " expects " +
                                           std::to_string(op->arg_sorts.size()) +
                                           " arguments, got " +
                                           std::to_string(term.args.size()) + context));
      return op->result_sort;
    }
    for (std::size_t i = 0; i < term.args.size(); ++i) {
      std::string arg_sort = check(term.args[i]);
      if (arg_sort.empty()) continue;
      if (!sig.comparable(arg_sort, op->arg_sorts[i])) {
        diags.push_back(error_at({1, 1}, "argument " + std::to_string(i + 1) + " of " +
                                             term.name + " has sort " + arg_sort +
                                             ", expected " + op->arg_sorts[i] + context));
      }
    }
    return op->result_sort;
  }

  // The evaluation hooks (arithmetic, comparison, boolean, conditional) form
  // an implicit signature no module declares.
  std::optional<std::string> check_builtin(const Term& term) {
    const auto& name = term.name;
    auto expect_bool = [&](const Term& arg) {
      std::string s = check(arg);
      if (!s.empty() && !sig.comparable(s, sig.bool_sort))
        diags.push_back(error_at({1, 1}, "argument of " + name + " is not boolean" + context));
    };
    auto numeric = [&](const Term& arg) {
      std::string s = check(arg);
      if (!s.empty() && !sig.comparable(s, sig.int_sort) &&
          !sig.comparable(s, sig.float_sort))
        diags.push_back(error_at({1, 1}, "argument of " + name + " is not numeric" + context));
      return s;
    };
    if ((name == "_and_" || name == "_or_") && term.args.size() == 2) {
      expect_bool(term.args[0]);
      expect_bool(term.args[1]);
      return sig.bool_sort;
    }
    if (name == "not_" && term.args.size() == 1) {
      expect_bool(term.args[0]);
      return sig.bool_sort;
    }
    if (name == "_==_" && term.args.size() == 2) {
      std::string a = check(term.args[0]);
      std::string b = check(term.args[1]);
      if (!a.empty() && !b.empty() && !sig.comparable(a, b))
        diags.push_back(
            error_at({1, 1}, "comparing incompatible sorts " + a + " and " + b + context));
      return sig.bool_sort;
    }
    if ((name == "_<_" || name == "_>=_") && term.args.size() == 2) {
      numeric(term.args[0]);
      numeric(term.args[1]);
      return sig.bool_sort;
    }
    if ((name == "_+_" || name == "_-_") && term.args.size() == 2) {
      std::string a = numeric(term.args[0]);
      numeric(term.args[1]);
      return a.empty() ? sig.int_sort : a;
    }
    if (name == "if_then_else_fi" && term.args.size() == 3) {
      expect_bool(term.args[0]);
      std::string t = check(term.args[1]);
      std::string e = check(term.args[2]);
      if (!t.empty() && !e.empty() && !sig.comparable(t, e))
        diags.push_back(error_at({1, 1}, "conditional branches have incompatible sorts" +
                                             context));
      return t.empty() ? e : t;
    }
    return std::nullopt;
  }
};

// Import closure over the environment; unknown imports are reported.
inline void closure(const CafeModule& module, const std::vector<CafeModule>& env,
                    std::set<std::string>& seen, std::vector<const CafeModule*>& out,
                    Diagnostics& diags) {
  for (const auto& imp : module.imports) {
    if (seen.count(imp.module)) continue;
    seen.insert(imp.module);
    const CafeModule* found = nullptr;
    for (const auto& m : env)
      if (m.name == imp.module) {
        found = &m;
        break;
      }
    if (!found) {
      diags.push_back(error_at({1, 1}, "module " + module.name + " imports unknown module " +
                                           imp.module));
      continue;
    }
    closure(*found, env, seen, out, diags);
    out.push_back(found);
  }
}

}  // namespace detail

// Never aborts on first error; collects one diagnostic per violation.
inline Diagnostics typecheck_module(const CafeModule& module,
                                    const std::vector<CafeModule>& env) {
  Diagnostics diags;

  std::set<std::string> seen{module.name};
  std::vector<const CafeModule*> imported;
  detail::closure(module, env, seen, imported, diags);

  Signature sig;
  for (const CafeModule* m : imported) sig.absorb(*m);

  std::set<std::string> imported_sorts = sig.sorts;
  sig.absorb(module);
  sig.close_subsorts();

  // No sort may be both hidden and visible in this module's own declarations.
  std::set<std::string> visible_here;
  for (const auto& line : module.visible_sorts)
    for (const auto& s : line.sorts) visible_here.insert(s);
  for (const auto& h : module.hidden_sorts) {
    if (visible_here.count(h))
      diags.push_back(
          error_at({1, 1}, "sort " + h + " declared both hidden and visible in " + module.name));
  }

  // Operator and variable sorts must exist.
  for (const auto& op : module.ops) {
    for (const auto& s : op.arg_sorts)
      if (!sig.has_sort(s))
        diags.push_back(error_at({1, 1}, "operator " + op.name + " uses undeclared sort " + s +
                                             " in " + module.name));
    if (!sig.has_sort(op.result_sort))
      diags.push_back(error_at({1, 1}, "operator " + op.name + " uses undeclared sort " +
                                           op.result_sort + " in " + module.name));
  }

  std::map<std::string, std::string> vars;
  for (const auto& var : module.vars) {
    if (vars.count(var.name))
      diags.push_back(error_at({1, 1}, "duplicate variable " + var.name + " in " + module.name));
    if (!sig.has_sort(var.sort))
      diags.push_back(error_at({1, 1}, "variable " + var.name + " has undeclared sort " +
                                           var.sort + " in " + module.name));
    vars[var.name] = var.sort;
  }

  for (std::size_t i = 0; i < module.eqs.size(); ++i) {
    const Equation& eq = module.eqs[i];
    std::string context = " (equation " + std::to_string(i + 1) + " of " + module.name + ")";
    detail::TermChecker checker{sig, vars, diags, context};
    std::string lhs_sort = checker.check(eq.lhs);
    std::string rhs_sort = checker.check(eq.rhs);
    if (!lhs_sort.empty() && !rhs_sort.empty() && !sig.comparable(lhs_sort, rhs_sort)) {
      diags.push_back(error_at({1, 1}, "equation sides have incompatible sorts " + lhs_sort +
                                           " and " + rhs_sort + context));
    }
    if (eq.conditional()) {
      std::string cond_sort = checker.check(*eq.condition);
      if (!cond_sort.empty() && !sig.comparable(cond_sort, sig.bool_sort))
        diags.push_back(error_at({1, 1}, "condition is not boolean" + context));
    }
    if (!detail::is_constructor_identity(eq)) {
      std::set<std::string> lhs_vars, other_vars;
      detail::collect_vars(eq.lhs, lhs_vars);
      detail::collect_vars(eq.rhs, other_vars);
      if (eq.conditional()) detail::collect_vars(*eq.condition, other_vars);
      for (const auto& v : other_vars) {
        if (!lhs_vars.count(v))
          diags.push_back(error_at({1, 1}, "non-executable equation: variable " + v +
                                               " does not occur on the left-hand side" +
                                               context));
      }
    }
  }
  return diags;
}

}  // namespace asn2cafe::cafe
