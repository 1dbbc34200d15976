// Name mangling for generated CafeOBJ entities, plus the pool that keeps
// operator names unique across a whole output file by appending 2, 3, ...
// to a base name that was already issued (Figure-10 style: returnclientid,
// returnclientid2, returnclientid3).
#pragma once

#include <cctype>
#include <map>
#include <set>
#include <string>

namespace asn2cafe::transform {

inline std::string to_lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

inline std::string to_upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

// Hyphens are preserved throughout; CafeOBJ identifiers admit them.
inline std::string mangle_module(const std::string& asn_name) { return to_upper(asn_name); }
inline std::string mangle_sort(const std::string& asn_name) { return asn_name; }
inline std::string mangle_constructor(const std::string& asn_name) { return to_lower(asn_name); }
inline std::string mangle_observer(const std::string& field_name) {
  return "return" + to_lower(field_name);
}
inline std::string mangle_variable(const std::string& sort_name) {
  return "a" + to_lower(sort_name);
}

enum class NameRole { Module, Sort, Constructor, Observer, Variable };

inline std::string mangle(const std::string& asn_name, NameRole role) {
  switch (role) {
    case NameRole::Module: return mangle_module(asn_name);
    case NameRole::Sort: return mangle_sort(asn_name);
    case NameRole::Constructor: return mangle_constructor(asn_name);
    case NameRole::Observer: return mangle_observer(asn_name);
    case NameRole::Variable: return mangle_variable(asn_name);
  }
  return asn_name;
}

class NamePool {
 public:
  // First issue returns the base itself, later ones base2, base3, ...
  std::string issue_op(const std::string& base) {
    int n = ++op_counters_[base];
    if (n == 1) return base;
    return base + std::to_string(n);
  }

  // Variable names are deduplicated per module; the module translator owns
  // one set per output module.
  std::string issue_var(std::set<std::string>& used, const std::string& base) {
    if (used.insert(base).second) return base;
    for (int n = 2;; ++n) {
      std::string candidate = base + std::to_string(n);
      if (used.insert(candidate).second) return candidate;
    }
  }

 private:
  std::map<std::string, int> op_counters_;
};

}  // namespace asn2cafe::transform
