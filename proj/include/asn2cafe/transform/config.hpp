#pragma once

#include <map>
#include <optional>
#include <string>

#include "asn2cafe/asn/ast.hpp"
#include "asn2cafe/cafe/ast.hpp"

namespace asn2cafe::transform {

enum class ChoiceGuardMode { Predicate, PerAlternativeConstructor };

// Which prelude module and sort a builtin ASN.1 type maps onto.
struct BuiltinTarget {
  std::string module;
  std::string sort;
};

struct TranslationConfig {
  std::optional<std::string> hidden_sort;
  ChoiceGuardMode choice_guard_mode = ChoiceGuardMode::Predicate;
  bool infer_hidden_from_abstract_syntax = false;
  bool emit_size_predicates = false;
  cafe::CafeModule::Semantics module_semantics = cafe::CafeModule::Semantics::Plain;
  std::map<asn::BuiltinKind, BuiltinTarget> builtin_map = default_builtin_map();

  static std::map<asn::BuiltinKind, BuiltinTarget> default_builtin_map() {
    return {
        {asn::BuiltinKind::Integer, {"INT", "Int"}},
        {asn::BuiltinKind::Boolean, {"BOOL", "Bool"}},
        {asn::BuiltinKind::Real, {"FLOAT", "Float"}},
        {asn::BuiltinKind::NumericString, {"STRING", "String"}},
        {asn::BuiltinKind::PrintableString, {"STRING", "String"}},
    };
  }

  const BuiltinTarget& target(asn::BuiltinKind kind) const { return builtin_map.at(kind); }
};

}  // namespace asn2cafe::transform
