// Renders an AsnModule back to source text. parse(print(m)) must be
// structurally equal to m; layout itself is not contractual.
#pragma once

#include <sstream>
#include <string>

#include "asn2cafe/asn/ast.hpp"

namespace asn2cafe::asn {

namespace detail {

inline void print_type(std::ostringstream& out, const AsnType& type, int indent);

inline void print_fields(std::ostringstream& out, const std::vector<NamedField>& fields,
                         int indent) {
  out << "{\n";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    out << std::string(indent + 4, ' ') << fields[i].name << " ";
    print_type(out, *fields[i].type, indent + 4);
    if (fields[i].optional) out << " OPTIONAL";
    if (i + 1 < fields.size()) out << ",";
    out << "\n";
  }
  out << std::string(indent, ' ') << "}";
}

inline void print_type(std::ostringstream& out, const AsnType& type, int indent) {
  switch (type.kind) {
    case AsnType::Kind::Sequence:
      out << "SEQUENCE ";
      print_fields(out, type.fields, indent);
      break;
    case AsnType::Kind::Set:
      out << "SET ";
      print_fields(out, type.fields, indent);
      break;
    case AsnType::Kind::Choice:
      out << "CHOICE ";
      print_fields(out, type.fields, indent);
      break;
    case AsnType::Kind::SequenceOf:
      out << "SEQUENCE OF ";
      print_type(out, *type.element, indent);
      break;
    case AsnType::Kind::SetOf:
      out << "SET OF ";
      print_type(out, *type.element, indent);
      break;
    case AsnType::Kind::Reference:
      out << type.ref_name;
      break;
    case AsnType::Kind::Builtin:
      out << builtin_name(type.builtin);
      if (type.size) {
        out << " (SIZE (" << type.size->min;
        if (!type.size->fixed()) out << ".." << type.size->max;
        out << "))";
      }
      break;
  }
}

}  // namespace detail

inline std::string print_module(const AsnModule& module) {
  std::ostringstream out;
  int indent = 0;
  if (!module.bare) {
    out << module.name << " DEFINITIONS ::= BEGIN\n\n";
  }
  if (module.exports.kind == ExportClause::Kind::None) {
    out << "EXPORTS ;\n\n";
  } else if (module.exports.kind == ExportClause::Kind::Names) {
    out << "EXPORTS ";
    for (std::size_t i = 0; i < module.exports.names.size(); ++i) {
      if (i) out << ", ";
      out << module.exports.names[i];
    }
    out << " ;\n\n";
  }
  if (!module.imports.empty()) {
    out << "IMPORTS ";
    for (std::size_t g = 0; g < module.imports.size(); ++g) {
      const auto& group = module.imports[g];
      if (g) out << "\n        ";
      for (std::size_t i = 0; i < group.names.size(); ++i) {
        if (i) out << ", ";
        out << group.names[i];
      }
      out << " FROM " << group.from_module;
    }
    out << " ;\n\n";
  }
  if (module.abstract_syntax_top) {
    out << "schema-abstract-syntax ABSTRACT-SYNTAX ::= { " << *module.abstract_syntax_top
        << " IDENTIFIED BY anything }\n\n";
  }
  for (const auto& assignment : module.assignments) {
    out << assignment.name << " ::= ";
    detail::print_type(out, *assignment.body, indent);
    out << "\n\n";
  }
  if (!module.bare) out << "END\n";
  return out.str();
}

}  // namespace asn2cafe::asn
