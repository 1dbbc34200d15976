// Executable view of a CafeFile: the merged signature plus its equations as
// left-to-right rewrite rules in declaration order. Constructor identity
// equations (rhs is a variable absent from the lhs) are not executable; they
// are dropped at load time with a warning.
#pragma once

#include <string>
#include <vector>

#include "asn2cafe/cafe/ast.hpp"
#include "asn2cafe/cafe/printer.hpp"
#include "asn2cafe/cafe/signature.hpp"
#include "asn2cafe/cafe/typecheck.hpp"
#include "asn2cafe/diagnostic.hpp"

namespace asn2cafe::rewrite {

struct RewriteSystem {
  cafe::Signature signature;
  std::vector<cafe::Equation> rules;  // declaration order

  static RewriteSystem from_modules(const std::vector<cafe::CafeModule>& modules,
                                    Diagnostics* warnings = nullptr) {
    RewriteSystem system;
    system.signature = cafe::build_signature(modules);
    for (const auto& module : modules) {
      for (const auto& eq : module.eqs) {
        if (cafe::detail::is_constructor_identity(eq)) {
          if (warnings)
            warnings->push_back(warning_at(
                {1, 1}, "skipping non-executable constructor identity equation " +
                            cafe::print_term(eq.lhs) + " = " + cafe::print_term(eq.rhs)));
          continue;
        }
        system.rules.push_back(eq);
      }
    }
    return system;
  }

  static RewriteSystem from_file(const cafe::CafeFile& file, Diagnostics* warnings = nullptr) {
    return from_modules(file.modules, warnings);
  }
};

struct ReduceResult {
  enum class Status { Normal, StepLimitExceeded };

  cafe::Term normal_form;
  std::size_t steps = 0;
  Status status = Status::Normal;
};

inline constexpr std::size_t default_step_limit = 100000;

}  // namespace asn2cafe::rewrite
