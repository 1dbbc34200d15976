// Target AST: CafeOBJ modules with sort/operator/variable/equation
// declarations, plus first-order terms for the equation bodies.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace asn2cafe::cafe {

struct Term {
  enum class Kind { Var, Apply, IntLit, BoolLit, FloatLit, StrLit };

  Kind kind = Kind::Apply;
  std::string name;  // Var: variable name; Apply: operator name
  std::string sort;  // Var only
  std::vector<Term> args;
  std::int64_t int_value = 0;
  bool bool_value = false;
  double float_value = 0.0;
  std::string str_value;

  bool operator==(const Term&) const = default;

  static Term var(std::string name, std::string sort) {
    Term t;
    t.kind = Kind::Var;
    t.name = std::move(name);
    t.sort = std::move(sort);
    return t;
  }
  static Term apply(std::string op, std::vector<Term> args = {}) {
    Term t;
    t.kind = Kind::Apply;
    t.name = std::move(op);
    t.args = std::move(args);
    return t;
  }
  static Term integer(std::int64_t v) {
    Term t;
    t.kind = Kind::IntLit;
    t.int_value = v;
    return t;
  }
  static Term boolean(bool v) {
    Term t;
    t.kind = Kind::BoolLit;
    t.bool_value = v;
    return t;
  }
  static Term floating(double v) {
    Term t;
    t.kind = Kind::FloatLit;
    t.float_value = v;
    return t;
  }
  static Term string(std::string v) {
    Term t;
    t.kind = Kind::StrLit;
    t.str_value = std::move(v);
    return t;
  }
};

struct OpDecl {
  std::string name;
  std::vector<std::string> arg_sorts;  // empty for constants
  std::string result_sort;

  bool operator==(const OpDecl&) const = default;
};

struct VarDecl {
  std::string name;
  std::string sort;

  bool operator==(const VarDecl&) const = default;
};

struct Equation {
  Term lhs;
  Term rhs;
  std::optional<Term> condition;  // rendered "ceq ... if ..."

  bool conditional() const { return condition.has_value(); }
  bool operator==(const Equation&) const = default;
};

enum class ImportMode { Protecting, Extending, Using };

struct Import {
  ImportMode mode = ImportMode::Protecting;
  std::string module;

  bool operator==(const Import&) const = default;
};

// One "[S1 S2 S3]" visible-sort line, optionally annotated with a comment.
struct VisibleLine {
  std::vector<std::string> sorts;
  std::string comment;
};

// One "[Super > sub1 sub2 ...]" line. In CafeOBJ a subsort declaration also
// brings the mentioned sorts into scope; the typechecker honors that.
struct SubsortDecl {
  std::string super;
  std::vector<std::string> subs;
  std::string comment;
};

struct CafeModule {
  enum class Semantics { Plain, Tight, Loose };

  std::string name;
  Semantics semantics = Semantics::Plain;
  std::vector<Import> imports;
  std::vector<std::string> hidden_sorts;  // rendered *[S]*
  std::vector<VisibleLine> visible_sorts;
  std::vector<SubsortDecl> subsort_decls;
  std::vector<OpDecl> ops;
  std::vector<VarDecl> vars;
  std::vector<Equation> eqs;
  std::vector<std::string> comments;  // trailing "-- text" lines
  bool builtin_prelude = false;       // synthesized INT/BOOL/FLOAT/STRING module
  bool import_stub = false;           // Rule 4 stub for an imported type

  const OpDecl* find_op(const std::string& op_name) const {
    for (const auto& op : ops)
      if (op.name == op_name) return &op;
    return nullptr;
  }
};

struct CafeFile {
  std::string file_name;  // ends in .mod
  std::vector<CafeModule> modules;

  const CafeModule* find(const std::string& module_name) const {
    for (const auto& m : modules)
      if (m.name == module_name) return &m;
    return nullptr;
  }
};

}  // namespace asn2cafe::cafe
