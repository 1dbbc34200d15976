// The hand-encoded NATLIST module: lists of naturals with nil, cons (_|_),
// concatenation (_@_) and mkl, the built-in fixture for the reduce command.
//
//   eq nil @ L2 = L2 .
//   eq (X | L1) @ L2 = X | (L1 @ L2) .
//   eq mkl(X, Y) = if Y < X then nil else X | mkl(X + 1, Y) fi .
#pragma once

#include "asn2cafe/cafe/ast.hpp"
#include "asn2cafe/rewrite/system.hpp"

namespace asn2cafe::rewrite {

inline cafe::CafeModule natlist_module() {
  using cafe::Term;
  cafe::CafeModule m;
  m.name = "NATLIST";
  m.semantics = cafe::CafeModule::Semantics::Tight;
  m.imports.push_back({cafe::ImportMode::Protecting, "NAT"});
  m.visible_sorts.push_back({{"NatList"}, ""});
  m.ops.push_back({"nil", {}, "NatList"});
  m.ops.push_back({"_|_", {"Nat", "NatList"}, "NatList"});
  m.ops.push_back({"_@_", {"NatList", "NatList"}, "NatList"});
  m.ops.push_back({"mkl", {"Nat", "Nat"}, "NatList"});
  m.vars.push_back({"X", "Nat"});
  m.vars.push_back({"Y", "Nat"});
  m.vars.push_back({"L1", "NatList"});
  m.vars.push_back({"L2", "NatList"});

  Term x = Term::var("X", "Nat");
  Term y = Term::var("Y", "Nat");
  Term l1 = Term::var("L1", "NatList");
  Term l2 = Term::var("L2", "NatList");
  Term nil = Term::apply("nil");

  m.eqs.push_back({Term::apply("_@_", {nil, l2}), l2, std::nullopt});
  m.eqs.push_back({Term::apply("_@_", {Term::apply("_|_", {x, l1}), l2}),
                   Term::apply("_|_", {x, Term::apply("_@_", {l1, l2})}), std::nullopt});
  m.eqs.push_back(
      {Term::apply("mkl", {x, y}),
       Term::apply("if_then_else_fi",
                   {Term::apply("_<_", {y, x}), nil,
                    Term::apply("_|_", {x, Term::apply("mkl", {Term::apply("_+_", {x, Term::integer(1)}), y})})}),
       std::nullopt});
  return m;
}

// NAT is the prelude module NATLIST protects; integer literals are read at
// sort Nat inside this system.
inline RewriteSystem natlist_system() {
  cafe::CafeModule nat;
  nat.name = "NAT";
  nat.builtin_prelude = true;
  nat.visible_sorts.push_back({{"Nat"}, ""});

  RewriteSystem system = RewriteSystem::from_modules({nat, natlist_module()});
  system.signature.int_sort = "Nat";
  return system;
}

}  // namespace asn2cafe::rewrite
