// Flattened view of one or more modules: declared sorts, the
// reflexive-transitive subsort relation, and operator declarations.
// Shared by the typechecker, the term parser and the reducer.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "asn2cafe/cafe/ast.hpp"

namespace asn2cafe::cafe {

struct Signature {
  std::set<std::string> sorts;
  // pairs (sub, super), reflexive-transitively closed over `sorts`
  std::set<std::pair<std::string, std::string>> subsorts;
  std::map<std::string, OpDecl> ops;  // operator names are file-unique

  // Literal sorts; the NATLIST fixture overrides the integer one with Nat.
  std::string int_sort = "Int";
  std::string bool_sort = "Bool";
  std::string float_sort = "Float";
  std::string string_sort = "String";

  bool has_sort(const std::string& s) const { return sorts.count(s) > 0; }

  bool sort_leq(const std::string& sub, const std::string& super) const {
    if (sub == super) return true;
    return subsorts.count({sub, super}) > 0;
  }

  // Comparable in either direction; used where a literal of a builtin sort
  // stands in for a value of an alias sort.
  bool comparable(const std::string& a, const std::string& b) const {
    return sort_leq(a, b) || sort_leq(b, a);
  }

  void add_sort(const std::string& s) { sorts.insert(s); }

  void add_subsort(const std::string& sub, const std::string& super) {
    sorts.insert(sub);
    sorts.insert(super);
    subsorts.insert({sub, super});
  }

  void add_op(const OpDecl& op) { ops.emplace(op.name, op); }

  const OpDecl* find_op(const std::string& name) const {
    auto it = ops.find(name);
    return it == ops.end() ? nullptr : &it->second;
  }

  void close_subsorts() {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::pair<std::string, std::string>> extra;
      for (const auto& [a, b] : subsorts)
        for (const auto& [c, d] : subsorts)
          if (b == c && !subsorts.count({a, d})) extra.emplace_back(a, d);
      for (auto& p : extra) {
        subsorts.insert(p);
        changed = true;
      }
    }
  }

  void absorb(const CafeModule& module) {
    for (const auto& h : module.hidden_sorts) add_sort(h);
    for (const auto& line : module.visible_sorts)
      for (const auto& s : line.sorts) add_sort(s);
    for (const auto& decl : module.subsort_decls) {
      add_sort(decl.super);
      for (const auto& sub : decl.subs) add_subsort(sub, decl.super);
    }
    for (const auto& op : module.ops) add_op(op);
  }
};

inline Signature build_signature(const std::vector<CafeModule>& modules) {
  Signature sig;
  for (const auto& m : modules) sig.absorb(m);
  sig.close_subsorts();
  return sig;
}

inline Signature build_signature(const CafeFile& file) { return build_signature(file.modules); }

}  // namespace asn2cafe::cafe
