// Reference resolution: lifts anonymous nested types into synthetic
// assignments, resolves every type reference to a local assignment or an
// imported name, builds the dependency graph and rejects reference cycles
// (direct recursion is outside the supported subset).
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "asn2cafe/asn/ast.hpp"

namespace asn2cafe::asn {

struct ResolvedSchema {
  AsnModule module;  // with lifted synthetic assignments in place
  std::vector<std::string> imported_names;  // order of first appearance
  // Dependency edges type -> referenced type, in declaration order.
  std::vector<std::pair<std::string, std::string>> edges;

  const AsnTypeAssignment* find(const std::string& name) const { return module.find(name); }
  bool imported(const std::string& name) const {
    return std::find(imported_names.begin(), imported_names.end(), name) !=
           imported_names.end();
  }
  std::vector<std::string> references_of(const std::string& name) const {
    std::vector<std::string> out;
    for (const auto& [from, to] : edges)
      if (from == name && std::find(out.begin(), out.end(), to) == out.end())
        out.push_back(to);
    return out;
  }
};

namespace detail {

// Replaces inline structured/list field types with references to synthetic
// assignments named Parent-fieldname (Parent-elem for list elements).
class Lifter {
 public:
  explicit Lifter(std::vector<AsnTypeAssignment>& out) : out_(out) {}

  AsnTypePtr lift_field_type(const AsnTypePtr& type, const std::string& parent,
                             const std::string& field, Position pos) {
    if (type->kind == AsnType::Kind::Reference || type->kind == AsnType::Kind::Builtin)
      return type;
    std::string synthetic = parent + "-" + field;
    define(synthetic, type, pos);
    return AsnType::make_reference(synthetic);
  }

  void define(const std::string& name, const AsnTypePtr& body, Position pos) {
    AsnTypeAssignment assignment;
    assignment.name = name;
    assignment.source_position = pos;
    assignment.body = lift_body(body, name, pos);
    out_.push_back(std::move(assignment));
  }

  AsnTypePtr lift_body(const AsnTypePtr& body, const std::string& name, Position pos) {
    if (body->structured()) {
      std::vector<NamedField> fields;
      for (const auto& f : body->fields) {
        NamedField nf = f;
        nf.type = lift_field_type(f.type, name, f.name, pos);
        fields.push_back(std::move(nf));
      }
      return AsnType::make_structured(body->kind, std::move(fields));
    }
    if (body->list_like()) {
      AsnTypePtr element = body->element;
      if (element->kind != AsnType::Kind::Reference &&
          element->kind != AsnType::Kind::Builtin) {
        std::string synthetic = name + "-elem";
        define(synthetic, element, pos);
        element = AsnType::make_reference(synthetic);
      }
      return AsnType::make_list(body->kind, element);
    }
    return body;
  }

 private:
  std::vector<AsnTypeAssignment>& out_;
};

inline void collect_references(const AsnType& type, std::vector<std::string>& refs) {
  switch (type.kind) {
    case AsnType::Kind::Reference:
      refs.push_back(type.ref_name);
      break;
    case AsnType::Kind::SequenceOf:
    case AsnType::Kind::SetOf:
      collect_references(*type.element, refs);
      break;
    case AsnType::Kind::Builtin:
      break;
    default:
      for (const auto& f : type.fields) collect_references(*f.type, refs);
      break;
  }
}

}  // namespace detail

inline Result<ResolvedSchema> resolve_references(const AsnModule& input) {
  Diagnostics diags;
  ResolvedSchema schema;
  schema.module = input;
  schema.module.assignments.clear();

  // Lift anonymous nested types. Synthetic assignments are inserted before
  // their parent so definitions precede use.
  for (const auto& assignment : input.assignments) {
    std::vector<AsnTypeAssignment> lifted;
    detail::Lifter lifter(lifted);
    lifter.define(assignment.name, assignment.body, assignment.source_position);
    // `define` appends the parent last; keep that order (children first).
    for (auto& a : lifted) schema.module.assignments.push_back(std::move(a));
  }

  std::set<std::string> defined;
  for (const auto& a : schema.module.assignments) defined.insert(a.name);

  for (const auto& group : input.imports) {
    for (const auto& name : group.names) {
      if (defined.count(name)) {
        diags.push_back(warning_at({1, 1}, "imported name " + name +
                                               " is shadowed by a local definition"));
        continue;
      }
      if (!schema.imported(name)) schema.imported_names.push_back(name);
    }
  }

  for (const auto& assignment : schema.module.assignments) {
    std::vector<std::string> refs;
    detail::collect_references(*assignment.body, refs);
    for (const auto& ref : refs) {
      if (!defined.count(ref) && !schema.imported(ref)) {
        diags.push_back(error_at(assignment.source_position,
                                 "unresolved type reference " + ref));
        continue;
      }
      if (defined.count(ref)) schema.edges.emplace_back(assignment.name, ref);
    }
  }
  if (has_errors(diags)) return Result<ResolvedSchema>::failure(std::move(diags));

  if (input.abstract_syntax_top && !defined.count(*input.abstract_syntax_top) &&
      !schema.imported(*input.abstract_syntax_top)) {
    diags.push_back(error_at({1, 1}, "ABSTRACT-SYNTAX names unknown type " +
                                         *input.abstract_syntax_top));
    return Result<ResolvedSchema>::failure(std::move(diags));
  }

  // Cycle detection over the reference graph.
  std::map<std::string, std::vector<std::string>> adjacency;
  for (const auto& [from, to] : schema.edges) adjacency[from].push_back(to);
  std::map<std::string, int> state;  // 0 unvisited, 1 on stack, 2 done
  std::vector<std::string> stack;
  std::vector<std::string> cycle;

  auto dfs = [&](auto&& self, const std::string& node) -> bool {
    state[node] = 1;
    stack.push_back(node);
    for (const auto& next : adjacency[node]) {
      if (state[next] == 1) {
        auto it = std::find(stack.begin(), stack.end(), next);
        cycle.assign(it, stack.end());
        cycle.push_back(next);
        return true;
      }
      if (state[next] == 0 && self(self, next)) return true;
    }
    stack.pop_back();
    state[node] = 2;
    return false;
  };
  for (const auto& assignment : schema.module.assignments) {
    if (state[assignment.name] == 0 && dfs(dfs, assignment.name)) {
      std::string text = "type reference cycle: ";
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) text += " -> ";
        text += cycle[i];
      }
      const AsnTypeAssignment* a = schema.find(cycle.front());
      diags.push_back(error_at(a ? a->source_position : Position{1, 1}, text));
      return Result<ResolvedSchema>::failure(std::move(diags));
    }
  }

  return Result<ResolvedSchema>::success(std::move(schema), std::move(diags));
}

}  // namespace asn2cafe::asn
