// Concrete-syntax printer for CafeFile. Output is deterministic: equal ASTs
// give byte-equal text. Mixfix operator names use underscore placeholders
// ("_|_", "_@_", "if_then_else_fi") and render infix.
#pragma once

#include <sstream>
#include <string>

#include "asn2cafe/cafe/ast.hpp"

namespace asn2cafe::cafe {

namespace detail {

inline bool is_infix(const std::string& name, std::string& core) {
  if (name.size() >= 3 && name.front() == '_' && name.back() == '_' &&
      name.find('_', 1) == name.size() - 1) {
    core = name.substr(1, name.size() - 2);
    return true;
  }
  return false;
}

inline void print_term(std::ostringstream& out, const Term& term, bool parenthesize);

// An infix argument needs parentheses when it is itself infix, except in the
// right-associative position of the same operator: 0 | 1 | 2 | nil reads
// flat, while (X | L1) @ L2 and X | (L1 @ L2) keep their grouping.
inline void print_infix_arg(std::ostringstream& out, const Term& arg,
                            const std::string& parent, bool right_position) {
  std::string core;
  bool arg_infix = arg.kind == Term::Kind::Apply &&
                   (is_infix(arg.name, core) || arg.name == "if_then_else_fi" ||
                    arg.name == "not_");
  bool parens = arg_infix && !(right_position && arg.name == parent);
  print_term(out, arg, parens);
}

inline void print_term(std::ostringstream& out, const Term& term, bool parenthesize = false) {
  switch (term.kind) {
    case Term::Kind::Var:
      out << term.name;
      return;
    case Term::Kind::IntLit:
      out << term.int_value;
      return;
    case Term::Kind::BoolLit:
      out << (term.bool_value ? "true" : "false");
      return;
    case Term::Kind::FloatLit: {
      std::ostringstream f;
      f << term.float_value;
      std::string s = f.str();
      if (s.find('.') == std::string::npos && s.find('e') == std::string::npos) s += ".0";
      out << s;
      return;
    }
    case Term::Kind::StrLit:
      out << '"' << term.str_value << '"';
      return;
    case Term::Kind::Apply:
      break;
  }
  std::string core;
  if (term.name == "if_then_else_fi" && term.args.size() == 3) {
    if (parenthesize) out << "(";
    out << "if ";
    print_term(out, term.args[0]);
    out << " then ";
    print_term(out, term.args[1]);
    out << " else ";
    print_term(out, term.args[2]);
    out << " fi";
    if (parenthesize) out << ")";
    return;
  }
  if (term.args.size() == 2 && is_infix(term.name, core)) {
    if (parenthesize) out << "(";
    print_infix_arg(out, term.args[0], term.name, false);
    out << " " << core << " ";
    print_infix_arg(out, term.args[1], term.name, true);
    if (parenthesize) out << ")";
    return;
  }
  if (term.name == "not_" && term.args.size() == 1) {
    if (parenthesize) out << "(";
    out << "not ";
    print_term(out, term.args[0], true);
    if (parenthesize) out << ")";
    return;
  }
  out << term.name;
  if (!term.args.empty()) {
    out << "(";
    for (std::size_t i = 0; i < term.args.size(); ++i) {
      if (i) out << ", ";
      print_term(out, term.args[i]);
    }
    out << ")";
  }
}

}  // namespace detail

inline std::string print_term(const Term& term) {
  std::ostringstream out;
  detail::print_term(out, term);
  return out.str();
}

inline std::string print_module(const CafeModule& module) {
  std::ostringstream out;
  out << "mod";
  if (module.semantics == CafeModule::Semantics::Tight) out << "!";
  if (module.semantics == CafeModule::Semantics::Loose) out << "*";
  out << " " << module.name << " {\n";
  const std::string ind = "  ";

  if (!module.imports.empty()) {
    // Grouped per import mode, protecting first; one pr(A + B + ...) line.
    for (ImportMode mode :
         {ImportMode::Protecting, ImportMode::Extending, ImportMode::Using}) {
      std::vector<std::string> names;
      for (const auto& imp : module.imports)
        if (imp.mode == mode) names.push_back(imp.module);
      if (names.empty()) continue;
      const char* kw = mode == ImportMode::Protecting ? "pr"
                       : mode == ImportMode::Extending ? "ex"
                                                       : "us";
      out << ind << kw << "(";
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out << " + ";
        out << names[i];
      }
      out << ")\n";
    }
  }
  for (const auto& hidden : module.hidden_sorts) out << ind << "*[" << hidden << "]*\n";
  for (const auto& line : module.visible_sorts) {
    out << ind << "[";
    for (std::size_t i = 0; i < line.sorts.size(); ++i) {
      if (i) out << " ";
      out << line.sorts[i];
    }
    out << "]";
    if (!line.comment.empty()) out << " -- " << line.comment;
    out << "\n";
  }
  for (const auto& decl : module.subsort_decls) {
    out << ind << "[" << decl.super << " >";
    for (const auto& sub : decl.subs) out << " " << sub;
    out << "]";
    if (!decl.comment.empty()) out << " -- " << decl.comment;
    out << "\n";
  }
  for (const auto& op : module.ops) {
    out << ind << "op " << op.name << " :";
    for (const auto& s : op.arg_sorts) out << " " << s;
    out << " -> " << op.result_sort << "\n";
  }
  for (const auto& var : module.vars) out << ind << "var " << var.name << " : " << var.sort << "\n";
  for (const auto& eq : module.eqs) {
    out << ind << (eq.conditional() ? "ceq " : "eq ");
    detail::print_term(out, eq.lhs);
    out << " = ";
    detail::print_term(out, eq.rhs);
    if (eq.conditional()) {
      out << " if ";
      detail::print_term(out, *eq.condition);
    }
    out << " .\n";
  }
  for (const auto& comment : module.comments) out << ind << "-- " << comment << "\n";
  out << "}";
  return out.str();
}

inline std::string pretty_print(const CafeFile& file) {
  std::ostringstream out;
  for (std::size_t i = 0; i < file.modules.size(); ++i) {
    if (i) out << "\n";
    out << print_module(file.modules[i]) << "\n";
  }
  return out.str();
}

}  // namespace asn2cafe::cafe
