// Structural correspondence between a schema and a generated CafeFile: every
// type assignment must be realized by a module (or a section of the hidden
// module) whose constructor, observers, equations, imports and sort
// declarations match what the rules prescribe. Failures are report entries,
// never exceptions; semantic faithfulness of the projections is covered by
// the rewrite-engine property tests instead.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "asn2cafe/asn/resolve.hpp"
#include "asn2cafe/cafe/ast.hpp"
#include "asn2cafe/transform/translate.hpp"

namespace asn2cafe::check {

struct CorrespondenceEntry {
  std::string type;
  std::string module;
  bool constructor_found = false;
  int observer_count = 0;
  int expected_observers = 0;
  int equation_count = 0;
  int expected_equations = 0;
  std::vector<std::string> field_sort_matches;  // "field -> sort ok" / mismatch notes
  std::vector<std::string> problems;

  bool pass() const { return problems.empty(); }
};

struct CorrespondenceReport {
  enum class Verdict { Pass, Fail };

  Verdict verdict = Verdict::Pass;
  std::vector<CorrespondenceEntry> entries;
  Diagnostics diagnostics;

  bool pass() const { return verdict == Verdict::Pass; }

  nlohmann::json to_json() const {
    nlohmann::json entries_json = nlohmann::json::array();
    for (const auto& e : entries) {
      entries_json.push_back({
          {"type", e.type},
          {"module", e.module},
          {"expected",
           {{"constructor", true},
            {"observers", e.expected_observers},
            {"equations", e.expected_equations}}},
          {"found",
           {{"constructor", e.constructor_found},
            {"observers", e.observer_count},
            {"equations", e.equation_count}}},
          {"verdict", e.pass() ? "pass" : "fail"},
          {"problems", e.problems},
      });
    }
    nlohmann::json diags_json = nlohmann::json::array();
    for (const auto& d : diagnostics)
      diags_json.push_back({{"severity", d.severity == Severity::Error ? "error" : "warning"},
                            {"message", d.message},
                            {"line", d.position.line},
                            {"column", d.position.column}});
    return {{"verdict", pass() ? "pass" : "fail"},
            {"entries", entries_json},
            {"diagnostics", diags_json}};
  }

  std::string to_text() const {
    std::ostringstream out;
    out << "correspondence: " << (pass() ? "PASS" : "FAIL") << "\n";
    for (const auto& e : entries) {
      out << "  " << (e.pass() ? "ok   " : "fail ") << e.type << " -> " << e.module
          << " (observers " << e.observer_count << "/" << e.expected_observers
          << ", equations " << e.equation_count << "/" << e.expected_equations << ")\n";
      for (const auto& p : e.problems) out << "       " << p << "\n";
    }
    for (const auto& d : diagnostics) out << "  " << format_diagnostic(d) << "\n";
    return out.str();
  }
};

namespace detail {

// Expected names re-derived with a fresh pool in the same order the
// translator issues them.
struct TypeExpectation {
  enum class Kind { Record, Choice, List, Alias };

  std::string type;
  std::string module_name;
  Kind kind = Kind::Record;
  bool absorbed = false;
  std::string type_sort;
  std::string ctor;
  std::vector<std::string> ctor_args;
  std::vector<std::string> observer_names;
  std::vector<std::string> observer_results;
  std::vector<std::string> field_names;
  std::vector<std::string> null_ops;      // predicate-mode choice
  std::string valid_op;                   // predicate-mode choice
  std::vector<std::string> alt_ctors;     // constructor-mode choice
  std::vector<std::string> list_ops;      // nil, cons, concat
  int expected_equations = 0;
  std::vector<std::string> subsort_line;  // expected subsort members, data view
  bool expect_subsort = false;
  std::vector<std::string> builtin_imports;  // prelude modules this type relies on
};

inline std::vector<TypeExpectation> expected_shapes(const asn::ResolvedSchema& schema,
                                                    const transform::TranslationConfig& config,
                                                    const transform::TranslationPlan& plan) {
  using transform::field_sort;
  std::vector<TypeExpectation> out;
  transform::NamePool pool;

  for (const auto& assignment : schema.module.assignments) {
    const asn::AsnType& body = *assignment.body;
    TypeExpectation e;
    e.type = assignment.name;
    e.module_name = plan.module_of(assignment.name);
    e.absorbed = plan.hidden && plan.is_merged(assignment.name);
    e.type_sort = transform::mangle_sort(assignment.name);
    bool hidden_self = plan.hidden && *plan.hidden == assignment.name;

    auto need_builtin = [&](const asn::AsnType& t) {
      if (t.kind != asn::AsnType::Kind::Builtin) return;
      const std::string& module = config.target(t.builtin).module;
      if (std::find(e.builtin_imports.begin(), e.builtin_imports.end(), module) ==
          e.builtin_imports.end())
        e.builtin_imports.push_back(module);
    };
    if (body.structured())
      for (const auto& f : body.fields) need_builtin(*f.type);
    else if (body.list_like())
      need_builtin(*body.element);
    else
      need_builtin(body);
    if (body.kind == asn::AsnType::Kind::Choice &&
        config.choice_guard_mode == transform::ChoiceGuardMode::Predicate)
      e.builtin_imports.push_back(config.target(asn::BuiltinKind::Boolean).module);

    if (body.structured()) {
      e.kind = body.kind == asn::AsnType::Kind::Choice ? TypeExpectation::Kind::Choice
                                                       : TypeExpectation::Kind::Record;
      std::vector<const asn::NamedField*> order;
      if (e.absorbed && plan.hidden) {
        const std::string hidden_sort = transform::mangle_sort(*plan.hidden);
        for (const auto& f : body.fields)
          if (field_sort(*f.type, config) == hidden_sort) order.push_back(&f);
        for (const auto& f : body.fields)
          if (field_sort(*f.type, config) != hidden_sort) order.push_back(&f);
      } else {
        for (const auto& f : body.fields) order.push_back(&f);
      }

      if (!hidden_self) {
        e.expect_subsort = true;
        for (const auto& f : body.fields) {
          std::string s = field_sort(*f.type, config);
          if (e.absorbed) s = plan.data_view(s);
          if (std::find(e.subsort_line.begin(), e.subsort_line.end(), s) ==
              e.subsort_line.end())
            e.subsort_line.push_back(s);
        }
      }

      bool predicate_choice = e.kind == TypeExpectation::Kind::Choice &&
                              config.choice_guard_mode == transform::ChoiceGuardMode::Predicate;
      bool record_shape = e.kind == TypeExpectation::Kind::Record || predicate_choice;
      if (record_shape) {
        e.ctor = pool.issue_op(transform::mangle_constructor(assignment.name));
        for (const asn::NamedField* f : order) {
          e.ctor_args.push_back(field_sort(*f->type, config));
          e.field_names.push_back(f->name);
        }
        for (const asn::NamedField* f : order)
          e.observer_names.push_back(pool.issue_op(transform::mangle_observer(f->name)));
        e.observer_results = e.ctor_args;
        e.expected_equations = static_cast<int>(order.size()) + 1;
        std::set<std::string> none_sorts;
        for (const asn::NamedField* f : order) {
          if (!f->optional) continue;
          std::string s = field_sort(*f->type, config);
          if (none_sorts.insert(s).second) pool.issue_op("none-" + transform::to_lower(s));
        }
        if (predicate_choice) {
          for (const asn::NamedField* f : order)
            e.null_ops.push_back(pool.issue_op("null-" + transform::to_lower(f->name)));
          e.valid_op = pool.issue_op("valid?");
          e.expected_equations += static_cast<int>(order.size()) + 1;
        }
      } else {
        // Constructor-mode choice.
        for (const asn::NamedField* f : order) {
          e.alt_ctors.push_back(pool.issue_op(transform::mangle_constructor(assignment.name) +
                                              "." + transform::to_lower(f->name)));
          e.observer_names.push_back(pool.issue_op(transform::mangle_observer(f->name)));
          e.observer_results.push_back(field_sort(*f->type, config));
          e.field_names.push_back(f->name);
        }
        e.expected_equations = static_cast<int>(order.size());
      }
    } else if (body.list_like()) {
      e.kind = TypeExpectation::Kind::List;
      e.list_ops.push_back(pool.issue_op("nil"));
      e.list_ops.push_back(pool.issue_op("_|_"));
      e.list_ops.push_back(pool.issue_op("_@_"));
      e.expected_equations = 2;
    } else {
      e.kind = TypeExpectation::Kind::Alias;
      if (!hidden_self && !(e.absorbed && field_sort(body, config) ==
                                              transform::mangle_sort(*plan.hidden))) {
        e.expect_subsort = true;
        std::string target = field_sort(body, config);
        e.subsort_line.push_back(e.absorbed ? plan.data_view(target) : target);
      }
      if (config.emit_size_predicates && body.kind == asn::AsnType::Kind::Builtin && body.size)
        pool.issue_op("sizeok-" + transform::to_lower(assignment.name));
    }
    // Record-type size predicates claim a pool name too.
    if (config.emit_size_predicates && body.structured()) {
      bool constrained = false;
      for (const auto& f : body.fields)
        constrained |= f.type->kind == asn::AsnType::Kind::Builtin && f.type->size.has_value();
      if (constrained) pool.issue_op("sizeok-" + transform::to_lower(assignment.name));
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace detail

inline CorrespondenceReport check_correspondence(const asn::ResolvedSchema& schema,
                                                 const cafe::CafeFile& file,
                                                 const transform::TranslationConfig& config) {
  CorrespondenceReport report;

  auto planned = transform::plan_translation(schema, config);
  if (!planned.ok()) {
    report.verdict = CorrespondenceReport::Verdict::Fail;
    report.diagnostics = std::move(planned.diagnostics);
    return report;
  }
  const transform::TranslationPlan& plan = *planned;
  auto expectations = detail::expected_shapes(schema, config, plan);

  // File-wide operator-name uniqueness (Figure-10 suffixing guarantees it).
  {
    std::map<std::string, std::string> owners;
    for (const auto& module : file.modules)
      for (const auto& op : module.ops) {
        auto [it, fresh] = owners.emplace(op.name, module.name);
        if (!fresh)
          report.diagnostics.push_back(
              error_at({1, 1}, "duplicate operator name " + op.name + " in " + module.name +
                                   " and " + it->second));
      }
  }

  // Hidden-sort placement.
  if (plan.hidden) {
    std::string hidden_module = transform::mangle_module(*plan.hidden);
    std::string hidden_sort = transform::mangle_sort(*plan.hidden);
    const cafe::CafeModule* m = file.find(hidden_module);
    if (!m) {
      report.diagnostics.push_back(
          error_at({1, 1}, "hidden module " + hidden_module + " missing"));
    } else {
      if (std::find(m->hidden_sorts.begin(), m->hidden_sorts.end(), hidden_sort) ==
          m->hidden_sorts.end())
        report.diagnostics.push_back(
            error_at({1, 1}, "module " + hidden_module + " does not declare *[" + hidden_sort +
                                 "]*"));
      for (const auto& decl : m->subsort_decls)
        if (decl.super == hidden_sort)
          report.diagnostics.push_back(error_at(
              {1, 1}, "hidden sort " + hidden_sort + " must not head a subsort declaration"));
    }
    for (const auto& module : file.modules) {
      if (module.name != hidden_module && !module.hidden_sorts.empty())
        report.diagnostics.push_back(error_at(
            {1, 1}, "unexpected hidden sort declaration in module " + module.name));
    }
  } else {
    for (const auto& module : file.modules)
      if (!module.hidden_sorts.empty())
        report.diagnostics.push_back(error_at(
            {1, 1}, "unexpected hidden sort declaration in module " + module.name));
  }

  auto sort_declared_in = [](const cafe::CafeModule& m, const std::string& sort) {
    for (const auto& h : m.hidden_sorts)
      if (h == sort) return true;
    for (const auto& line : m.visible_sorts)
      for (const auto& s : line.sorts)
        if (s == sort) return true;
    for (const auto& d : m.subsort_decls) {
      if (d.super == sort) return true;
      for (const auto& s : d.subs)
        if (s == sort) return true;
    }
    return false;
  };

  for (const auto& e : expectations) {
    CorrespondenceEntry entry;
    entry.type = e.type;
    entry.module = e.module_name;
    entry.expected_observers = static_cast<int>(e.observer_names.size());
    entry.expected_equations = e.expected_equations;

    const cafe::CafeModule* module = file.find(e.module_name);
    if (!module) {
      entry.problems.push_back("module " + e.module_name + " missing");
      report.entries.push_back(std::move(entry));
      continue;
    }

    // Constructor.
    if (e.kind == detail::TypeExpectation::Kind::Record ||
        (e.kind == detail::TypeExpectation::Kind::Choice && !e.ctor.empty())) {
      const cafe::OpDecl* ctor = module->find_op(e.ctor);
      entry.constructor_found = ctor != nullptr;
      if (!ctor) {
        entry.problems.push_back("constructor " + e.ctor + " missing");
      } else {
        if (ctor->arg_sorts.size() != e.ctor_args.size())
          entry.problems.push_back(
              "constructor " + e.ctor + " has arity " + std::to_string(ctor->arg_sorts.size()) +
              ", expected " + std::to_string(e.ctor_args.size()));
        else if (ctor->arg_sorts != e.ctor_args)
          entry.problems.push_back("constructor " + e.ctor + " argument sorts differ");
        if (ctor->result_sort != e.type_sort)
          entry.problems.push_back("constructor " + e.ctor + " result sort " +
                                   ctor->result_sort + ", expected " + e.type_sort);
      }
    } else if (e.kind == detail::TypeExpectation::Kind::Choice) {
      entry.constructor_found = true;
      for (const auto& alt : e.alt_ctors)
        if (!module->find_op(alt)) {
          entry.constructor_found = false;
          entry.problems.push_back("alternative constructor " + alt + " missing");
        }
    } else if (e.kind == detail::TypeExpectation::Kind::List) {
      entry.constructor_found = true;
      for (const auto& op : e.list_ops)
        if (!module->find_op(op)) {
          entry.constructor_found = false;
          entry.problems.push_back("list operator " + op + " missing");
        }
    } else {
      entry.constructor_found = true;  // aliases declare no operators
    }

    // Observers biject with fields and carry the right sorts.
    for (std::size_t i = 0; i < e.observer_names.size(); ++i) {
      const cafe::OpDecl* obs = module->find_op(e.observer_names[i]);
      if (!obs) {
        entry.problems.push_back("observer " + e.observer_names[i] + " missing");
        continue;
      }
      ++entry.observer_count;
      if (obs->arg_sorts != std::vector<std::string>{e.type_sort})
        entry.problems.push_back("observer " + e.observer_names[i] + " argument sorts differ");
      if (obs->result_sort != e.observer_results[i]) {
        entry.problems.push_back("observer " + e.observer_names[i] + " returns " +
                                 obs->result_sort + ", expected " + e.observer_results[i]);
        entry.field_sort_matches.push_back(e.field_names[i] + " -> " + obs->result_sort +
                                           " (expected " + e.observer_results[i] + ")");
      } else {
        entry.field_sort_matches.push_back(e.field_names[i] + " -> " + obs->result_sort +
                                           " ok");
      }
    }
    if (entry.observer_count != entry.expected_observers)
      entry.problems.push_back(e.type + ": " + std::to_string(entry.observer_count) +
                               " observers, expected " +
                               std::to_string(entry.expected_observers));

    // Choice guards per mode.
    if (e.kind == detail::TypeExpectation::Kind::Choice) {
      for (const auto& null_op : e.null_ops)
        if (!module->find_op(null_op))
          entry.problems.push_back("null constant " + null_op + " missing");
      if (!e.valid_op.empty() && !module->find_op(e.valid_op))
        entry.problems.push_back("guard " + e.valid_op + " missing");
    }

    // Equation count: equations whose head is one of this type's operators.
    {
      std::set<std::string> heads;
      if (!e.ctor.empty()) heads.insert(e.ctor);
      for (const auto& o : e.observer_names) heads.insert(o);
      if (!e.valid_op.empty()) heads.insert(e.valid_op);
      if (e.kind == detail::TypeExpectation::Kind::List && e.list_ops.size() == 3)
        heads.insert(e.list_ops[2]);
      for (const auto& eq : module->eqs)
        if (eq.lhs.kind == cafe::Term::Kind::Apply && heads.count(eq.lhs.name))
          ++entry.equation_count;
      if (entry.equation_count != entry.expected_equations)
        entry.problems.push_back(e.type + ": " + std::to_string(entry.equation_count) +
                                 " equations, expected " +
                                 std::to_string(entry.expected_equations));
    }

    // Subsort declaration.
    if (e.expect_subsort) {
      bool found = false;
      for (const auto& decl : module->subsort_decls) {
        bool matches = e.kind == detail::TypeExpectation::Kind::Alias
                           ? (decl.subs == std::vector<std::string>{e.type_sort} &&
                              decl.super == e.subsort_line.front())
                           : (decl.super == e.type_sort && decl.subs == e.subsort_line);
        if (matches) {
          found = true;
          break;
        }
      }
      if (!found && e.kind == detail::TypeExpectation::Kind::Alias && e.absorbed)
        found = sort_declared_in(*module, e.type_sort);
      if (!found)
        entry.problems.push_back("subsort declaration for " + e.type + " missing or wrong");
    }

    // Reference edges: a protecting import or same-module placement. Inside
    // the hidden module a local sort declaration stands in for the types the
    // merge rule keeps out of the import line.
    for (const auto& [from, to] : schema.edges) {
      if (from != e.type) continue;
      std::string to_module = plan.module_of(to);
      if (to_module == e.module_name) continue;
      bool imported = false;
      for (const auto& imp : module->imports)
        if (imp.module == to_module) imported = true;
      bool merged_local = e.absorbed && sort_declared_in(*module, transform::mangle_sort(to));
      if (!imported && !merged_local)
        entry.problems.push_back("reference " + e.type + " -> " + to +
                                 " has no protecting import");
    }

    // Builtin prelude imports required by this type's components.
    for (const auto& prelude : e.builtin_imports) {
      bool imported = false;
      for (const auto& imp : module->imports) imported |= imp.module == prelude;
      if (!imported)
        entry.problems.push_back(e.type + " needs the builtin module " + prelude +
                                 " but " + e.module_name + " does not import it");
    }

    report.entries.push_back(std::move(entry));
  }

  // Stub modules for imported names.
  for (const auto& name : schema.imported_names) {
    std::string stub = transform::mangle_module(name);
    if (!file.find(stub))
      report.diagnostics.push_back(error_at({1, 1}, "stub module " + stub +
                                                        " for imported type " + name +
                                                        " missing"));
  }

  bool failed = has_errors(report.diagnostics);
  for (const auto& entry : report.entries) failed |= !entry.pass();
  report.verdict = failed ? CorrespondenceReport::Verdict::Fail
                          : CorrespondenceReport::Verdict::Pass;
  return report;
}

}  // namespace asn2cafe::check
