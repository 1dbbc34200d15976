// File-level validation: unique module names, modules ordered after their
// imports, file-wide operator-name uniqueness, and a typecheck of every
// module in its import environment.
#pragma once

#include <map>
#include <set>
#include <string>

#include "asn2cafe/cafe/typecheck.hpp"

namespace asn2cafe::check {

inline Diagnostics check_wellformed(const cafe::CafeFile& file) {
  Diagnostics diags;

  std::set<std::string> seen;
  for (const auto& module : file.modules) {
    if (!seen.insert(module.name).second)
      diags.push_back(error_at({1, 1}, "duplicate module name " + module.name));
  }

  std::set<std::string> defined;
  for (const auto& module : file.modules) {
    for (const auto& imp : module.imports) {
      if (!defined.count(imp.module))
        diags.push_back(error_at({1, 1}, "module " + imp.module +
                                             " used before definition (imported by " +
                                             module.name + ")"));
    }
    defined.insert(module.name);
  }

  std::map<std::string, std::string> op_owner;
  for (const auto& module : file.modules) {
    for (const auto& op : module.ops) {
      auto [it, fresh] = op_owner.emplace(op.name, module.name);
      if (!fresh)
        diags.push_back(error_at({1, 1}, "duplicate operator name " + op.name + " in " +
                                             module.name + " and " + it->second));
    }
  }

  for (const auto& module : file.modules) {
    Diagnostics module_diags = cafe::typecheck_module(module, file.modules);
    diags.insert(diags.end(), module_diags.begin(), module_diags.end());
  }
  return diags;
}

}  // namespace asn2cafe::check
