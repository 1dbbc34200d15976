// AST for the supported ASN.1 subset: SEQUENCE/SET/CHOICE/SEQUENCE OF/SET OF,
// type aliases, INTEGER/REAL/BOOLEAN/NumericString/PrintableString with SIZE
// constraints, OPTIONAL members, IMPORTS/EXPORTS and the ABSTRACT-SYNTAX header.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "asn2cafe/diagnostic.hpp"

namespace asn2cafe::asn {

enum class BuiltinKind { Integer, Real, Boolean, NumericString, PrintableString };

inline const char* builtin_name(BuiltinKind kind) {
  switch (kind) {
    case BuiltinKind::Integer: return "INTEGER";
    case BuiltinKind::Real: return "REAL";
    case BuiltinKind::Boolean: return "BOOLEAN";
    case BuiltinKind::NumericString: return "NumericString";
    case BuiltinKind::PrintableString: return "PrintableString";
  }
  return "?";
}

// min == max encodes a fixed size, e.g. SIZE (27).
struct SizeConstraint {
  std::uint64_t min = 0;
  std::uint64_t max = 0;

  bool fixed() const { return min == max; }
  bool operator==(const SizeConstraint&) const = default;
};

struct AsnType;
using AsnTypePtr = std::shared_ptr<const AsnType>;

struct NamedField {
  std::string name;  // starts lowercase
  AsnTypePtr type;
  bool optional = false;
};

struct AsnType {
  enum class Kind { Sequence, Set, Choice, SequenceOf, SetOf, Reference, Builtin };

  Kind kind = Kind::Reference;
  std::vector<NamedField> fields;          // Sequence / Set / Choice
  AsnTypePtr element;                      // SequenceOf / SetOf
  std::string ref_name;                    // Reference
  BuiltinKind builtin = BuiltinKind::Integer;
  std::optional<SizeConstraint> size;      // Builtin only

  bool structured() const {
    return kind == Kind::Sequence || kind == Kind::Set || kind == Kind::Choice;
  }
  bool list_like() const { return kind == Kind::SequenceOf || kind == Kind::SetOf; }

  static AsnTypePtr make_reference(std::string name) {
    auto t = std::make_shared<AsnType>();
    t->kind = Kind::Reference;
    t->ref_name = std::move(name);
    return t;
  }
  static AsnTypePtr make_builtin(BuiltinKind kind, std::optional<SizeConstraint> size = {}) {
    auto t = std::make_shared<AsnType>();
    t->kind = Kind::Builtin;
    t->builtin = kind;
    t->size = size;
    return t;
  }
  static AsnTypePtr make_structured(Kind kind, std::vector<NamedField> fields) {
    auto t = std::make_shared<AsnType>();
    t->kind = kind;
    t->fields = std::move(fields);
    return t;
  }
  static AsnTypePtr make_list(Kind kind, AsnTypePtr element) {
    auto t = std::make_shared<AsnType>();
    t->kind = kind;
    t->element = std::move(element);
    return t;
  }
};

inline bool equals(const AsnType& a, const AsnType& b);

inline bool equals(const NamedField& a, const NamedField& b) {
  return a.name == b.name && a.optional == b.optional && equals(*a.type, *b.type);
}

inline bool equals(const AsnType& a, const AsnType& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case AsnType::Kind::Reference:
      return a.ref_name == b.ref_name;
    case AsnType::Kind::Builtin:
      return a.builtin == b.builtin && a.size == b.size;
    case AsnType::Kind::SequenceOf:
    case AsnType::Kind::SetOf:
      return equals(*a.element, *b.element);
    default: {
      if (a.fields.size() != b.fields.size()) return false;
      for (std::size_t i = 0; i < a.fields.size(); ++i)
        if (!equals(a.fields[i], b.fields[i])) return false;
      return true;
    }
  }
}

struct AsnTypeAssignment {
  std::string name;  // type-reference: starts uppercase
  AsnTypePtr body;
  Position source_position;
};

struct ImportGroup {
  std::vector<std::string> names;
  std::string from_module;
};

struct ExportClause {
  enum class Kind { All, None, Names };
  Kind kind = Kind::All;  // omitted EXPORTS means everything is exportable
  std::vector<std::string> names;
};

struct AsnModule {
  std::string name;
  bool bare = false;  // true when parsed without a DEFINITIONS wrapper
  ExportClause exports;
  std::vector<ImportGroup> imports;
  std::vector<AsnTypeAssignment> assignments;
  std::optional<std::string> abstract_syntax_top;

  const AsnTypeAssignment* find(const std::string& type_name) const {
    for (const auto& a : assignments)
      if (a.name == type_name) return &a;
    return nullptr;
  }
};

inline bool equals(const AsnModule& a, const AsnModule& b) {
  if (a.name != b.name || a.bare != b.bare) return false;
  if (a.exports.kind != b.exports.kind || a.exports.names != b.exports.names) return false;
  if (a.imports.size() != b.imports.size()) return false;
  for (std::size_t i = 0; i < a.imports.size(); ++i)
    if (a.imports[i].names != b.imports[i].names ||
        a.imports[i].from_module != b.imports[i].from_module)
      return false;
  if (a.abstract_syntax_top != b.abstract_syntax_top) return false;
  if (a.assignments.size() != b.assignments.size()) return false;
  for (std::size_t i = 0; i < a.assignments.size(); ++i)
    if (a.assignments[i].name != b.assignments[i].name ||
        !equals(*a.assignments[i].body, *b.assignments[i].body))
      return false;
  return true;
}

}  // namespace asn2cafe::asn
