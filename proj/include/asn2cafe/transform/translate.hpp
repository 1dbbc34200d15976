// The schema-to-CafeOBJ translation.
//
// Every type assignment becomes one module: SEQUENCE/SET types get a subsort
// declaration, an n-ary constructor, one projection observer per component
// and the matching equations; CHOICE adds transmission guards; SEQUENCE OF /
// SET OF become list modules; aliases become subsorts of their target sort.
// Imported-from-elsewhere types become stub modules that every generated
// module protects.
//
// When a hidden sort H is selected, H's module declares *[H]*, loses its own
// subsort declaration, and absorbs every type that (directly or through other
// types) refers to H. Inside that module the sort-declaration lines show the
// data view of a type: H itself and imported record types are represented by
// their identifying component's sort, so a reference to the state appears as
// the state's key. Constructors of absorbed types take the state argument
// first. Record types keyed by H's identifier sort stay separate modules but
// are listed as plain visible sorts instead of being imported.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "asn2cafe/asn/resolve.hpp"
#include "asn2cafe/cafe/ast.hpp"
#include "asn2cafe/transform/config.hpp"
#include "asn2cafe/transform/name_pool.hpp"

namespace asn2cafe::transform {

namespace detail {

inline std::string size_text(const asn::SizeConstraint& c) {
  std::string s = "SIZE (" + std::to_string(c.min);
  if (!c.fixed()) s += ".." + std::to_string(c.max);
  return s + ")";
}

}  // namespace detail

// The CafeOBJ sort a field type denotes. Only references and builtins appear
// in field position once anonymous nested types are lifted.
inline std::string field_sort(const asn::AsnType& type, const TranslationConfig& config) {
  if (type.kind == asn::AsnType::Kind::Reference) return mangle_sort(type.ref_name);
  return config.target(type.builtin).sort;
}

// A type's identifying component: the sort of its first field (element sort
// for lists, target sort for aliases).
inline std::string id_sort(const asn::AsnTypeAssignment& assignment,
                           const TranslationConfig& config) {
  const asn::AsnType& body = *assignment.body;
  if (body.structured()) return field_sort(*body.fields.front().type, config);
  if (body.list_like()) return field_sort(*body.element, config);
  return field_sort(body, config);
}

// Classification of the schema under one configuration: which types are
// absorbed into the hidden-sort module and which stay separate.
struct TranslationPlan {
  const asn::ResolvedSchema* schema = nullptr;
  const TranslationConfig* config = nullptr;
  std::optional<std::string> hidden;  // validated type name
  std::string hidden_id;              // id sort of the hidden type ("" if none)
  std::set<std::string> merged;       // type names absorbed into the hidden module
  std::set<std::string> companions;   // keyed record types: visible sorts, never imported

  bool is_merged(const std::string& name) const { return merged.count(name) > 0; }
  bool is_companion(const std::string& name) const { return companions.count(name) > 0; }

  std::string module_of(const std::string& type_name) const {
    if (hidden && is_merged(type_name)) return mangle_module(*hidden);
    return mangle_module(type_name);
  }

  // How a sort renders inside the hidden module's sort-declaration lines.
  std::string data_view(const std::string& sort) const {
    if (!hidden) return sort;
    if (sort == mangle_sort(*hidden)) return hidden_id;
    const asn::AsnTypeAssignment* a = schema->find(sort);
    if (a && a->body->structured() && !is_merged(sort) && !is_companion(sort))
      return id_sort(*a, *config);
    return sort;
  }
};

inline Result<TranslationPlan> plan_translation(const asn::ResolvedSchema& schema,
                                                const TranslationConfig& config) {
  TranslationPlan plan;
  plan.schema = &schema;
  plan.config = &config;
  Diagnostics diags;

  if (config.hidden_sort) {
    if (!schema.find(*config.hidden_sort)) {
      diags.push_back(error_at({1, 1}, "hidden sort " + *config.hidden_sort +
                                           " does not name a type in the schema"));
      return Result<TranslationPlan>::failure(std::move(diags));
    }
    plan.hidden = *config.hidden_sort;
  } else if (config.infer_hidden_from_abstract_syntax && schema.module.abstract_syntax_top) {
    plan.hidden = *schema.module.abstract_syntax_top;
    if (!schema.find(*plan.hidden)) {
      diags.push_back(error_at({1, 1}, "ABSTRACT-SYNTAX top-level type " + *plan.hidden +
                                           " is imported, not defined; cannot use it as the "
                                           "hidden sort"));
      return Result<TranslationPlan>::failure(std::move(diags));
    }
    diags.push_back(warning_at({1, 1}, "using ABSTRACT-SYNTAX top-level type " + *plan.hidden +
                                           " as the hidden sort"));
  }

  if (plan.hidden) {
    const asn::AsnTypeAssignment* h = schema.find(*plan.hidden);
    plan.hidden_id = id_sort(*h, config);

    // Absorb every type that reaches the hidden type through references.
    plan.merged.insert(*plan.hidden);
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [from, to] : schema.edges) {
        if (plan.merged.count(to) && !plan.merged.count(from)) {
          plan.merged.insert(from);
          changed = true;
        }
      }
    }

    // Record types among H's own components that carry H's identifier are
    // state data: they keep their module but the hidden module only lists
    // their sort.
    bool id_is_user_type = schema.find(plan.hidden_id) != nullptr ||
                           schema.imported(plan.hidden_id);
    if (id_is_user_type) {
      const asn::AsnType& body = *h->body;
      std::vector<std::string> child_sorts;
      if (body.structured())
        for (const auto& f : body.fields) child_sorts.push_back(field_sort(*f.type, config));
      else if (body.list_like())
        child_sorts.push_back(field_sort(*body.element, config));
      for (const auto& child : child_sorts) {
        const asn::AsnTypeAssignment* u = schema.find(child);
        if (!u || !u->body->structured() || plan.is_merged(child)) continue;
        for (const auto& f : u->body->fields) {
          if (field_sort(*f.type, config) == plan.hidden_id) {
            plan.companions.insert(child);
            break;
          }
        }
      }
    }
  }
  return Result<TranslationPlan>::success(std::move(plan), std::move(diags));
}

namespace detail {

struct ModuleBuilder {
  cafe::CafeModule module;
  int position = 0;  // schema index, used as the topological tie-break
  std::set<std::string> var_names;
  std::map<std::string, std::vector<std::string>> vars_by_sort;
  std::vector<std::string> builtin_imports;  // first-use order
  std::vector<std::string> user_imports;     // first-use order
  std::set<std::string> none_sorts;

  void need_builtin(const std::string& name) {
    if (std::find(builtin_imports.begin(), builtin_imports.end(), name) ==
        builtin_imports.end())
      builtin_imports.push_back(name);
  }
  void need_user(const std::string& name) {
    if (name == module.name) return;
    if (std::find(user_imports.begin(), user_imports.end(), name) == user_imports.end())
      user_imports.push_back(name);
  }

  // The k-th variable of a sort within one constructor pattern; reused across
  // types in the same module, fresh when a pattern repeats a sort.
  std::string var_for(NamePool& pool, const std::string& sort, std::size_t occurrence) {
    auto& issued = vars_by_sort[sort];
    if (occurrence < issued.size()) return issued[occurrence];
    std::string name = pool.issue_var(var_names, mangle_variable(sort));
    issued.push_back(name);
    module.vars.push_back({name, sort});
    return name;
  }
};

// Canonical prelude order for import lines and prelude emission.
inline const std::vector<std::string>& prelude_order() {
  static const std::vector<std::string> order = {"INT", "BOOL", "FLOAT", "STRING"};
  return order;
}

class Translator {
 public:
  Translator(const asn::ResolvedSchema& schema, const TranslationConfig& config,
             const TranslationPlan& plan, NamePool& pool)
      : schema_(schema), config_(config), plan_(plan), pool_(pool) {}

  // Translates one assignment into the given builder. `absorbed` marks a
  // non-hidden type placed inside the hidden module.
  void translate_into(ModuleBuilder& b, const asn::AsnTypeAssignment& assignment,
                      bool absorbed) {
    const asn::AsnType& body = *assignment.body;
    switch (body.kind) {
      case asn::AsnType::Kind::Sequence:
      case asn::AsnType::Kind::Set:
        record_piece(b, assignment, absorbed, /*choice=*/false);
        break;
      case asn::AsnType::Kind::Choice:
        record_piece(b, assignment, absorbed, /*choice=*/true);
        break;
      case asn::AsnType::Kind::SequenceOf:
      case asn::AsnType::Kind::SetOf:
        list_piece(b, assignment, absorbed);
        break;
      case asn::AsnType::Kind::Reference:
      case asn::AsnType::Kind::Builtin:
        alias_piece(b, assignment, absorbed);
        break;
    }
  }

  void note_reference(ModuleBuilder& b, const asn::AsnType& type, bool absorbed) {
    if (type.kind == asn::AsnType::Kind::Builtin) {
      b.need_builtin(config_.target(type.builtin).module);
      return;
    }
    const std::string& name = type.ref_name;
    if (absorbed) {
      // Inside the hidden module: absorbed types are local, companions and
      // alias/stub sorts are declared as plain sorts; only separate record
      // and list modules are protected.
      if (plan_.is_merged(name) || plan_.is_companion(name)) return;
      const asn::AsnTypeAssignment* a = schema_.find(name);
      if (a && (a->body->structured() || a->body->list_like()))
        b.need_user(mangle_module(name));
      return;
    }
    b.need_user(plan_.module_of(name));
  }

 private:
  const asn::ResolvedSchema& schema_;
  const TranslationConfig& config_;
  const TranslationPlan& plan_;
  NamePool& pool_;

  bool is_hidden_type(const std::string& name) const {
    return plan_.hidden && *plan_.hidden == name;
  }

  std::string sort_line_view(const std::string& sort, bool absorbed) const {
    return absorbed ? plan_.data_view(sort) : sort;
  }

  void record_piece(ModuleBuilder& b, const asn::AsnTypeAssignment& assignment, bool absorbed,
                    bool choice) {
    const asn::AsnType& body = *assignment.body;
    const std::string type_sort = mangle_sort(assignment.name);
    const bool hidden_self = is_hidden_type(assignment.name);

    // Constructor argument order: the state argument comes first for types
    // absorbed into the hidden module.
    std::vector<const asn::NamedField*> order;
    if (absorbed && plan_.hidden) {
      const std::string hidden_sort = mangle_sort(*plan_.hidden);
      for (const auto& f : body.fields)
        if (field_sort(*f.type, config_) == hidden_sort) order.push_back(&f);
      for (const auto& f : body.fields)
        if (field_sort(*f.type, config_) != hidden_sort) order.push_back(&f);
    } else {
      for (const auto& f : body.fields) order.push_back(&f);
    }

    // Subsort declaration in declared component order; dropped for the hidden
    // type itself.
    if (!hidden_self) {
      cafe::SubsortDecl decl;
      decl.super = type_sort;
      std::string comment;
      for (const auto& f : body.fields) {
        std::string s = sort_line_view(field_sort(*f.type, config_), absorbed);
        if (std::find(decl.subs.begin(), decl.subs.end(), s) == decl.subs.end())
          decl.subs.push_back(s);
        if (f.type->kind == asn::AsnType::Kind::Builtin && f.type->size) {
          if (!comment.empty()) comment += "; ";
          comment += f.name + ": " + size_text(*f.type->size);
        }
      }
      decl.comment = comment;
      b.module.subsort_decls.push_back(std::move(decl));
    }

    for (const auto& f : body.fields) note_reference(b, *f.type, absorbed);

    // Variables: one for the main sort, then one per constructor argument
    // (shared across equal sorts, fresh when a pattern repeats a sort).
    std::string main_var = b.var_for(pool_, type_sort, 0);
    std::vector<std::string> arg_sorts;
    std::vector<std::string> arg_vars;
    {
      std::map<std::string, std::size_t> occurrence;
      for (const asn::NamedField* f : order) {
        std::string s = field_sort(*f->type, config_);
        arg_sorts.push_back(s);
        arg_vars.push_back(b.var_for(pool_, s, occurrence[s]++));
      }
    }

    auto pattern = [&](const std::string& ctor) {
      std::vector<cafe::Term> args;
      for (std::size_t i = 0; i < arg_vars.size(); ++i)
        args.push_back(cafe::Term::var(arg_vars[i], arg_sorts[i]));
      return cafe::Term::apply(ctor, std::move(args));
    };

    if (!choice || config_.choice_guard_mode == ChoiceGuardMode::Predicate) {
      std::string ctor = pool_.issue_op(mangle_constructor(assignment.name));
      b.module.ops.push_back({ctor, arg_sorts, type_sort});
      std::vector<std::string> observers;
      for (const asn::NamedField* f : order)
        observers.push_back(pool_.issue_op(mangle_observer(f->name)));
      for (std::size_t i = 0; i < order.size(); ++i)
        b.module.ops.push_back({observers[i], {type_sort}, arg_sorts[i]});

      b.module.eqs.push_back(
          {pattern(ctor), cafe::Term::var(main_var, type_sort), std::nullopt});
      for (std::size_t i = 0; i < order.size(); ++i) {
        b.module.eqs.push_back({cafe::Term::apply(observers[i], {pattern(ctor)}),
                                cafe::Term::var(arg_vars[i], arg_sorts[i]), std::nullopt});
      }

      // OPTIONAL components get an absent-value constant of their sort.
      for (const asn::NamedField* f : order) {
        if (!f->optional) continue;
        std::string s = field_sort(*f->type, config_);
        if (!b.none_sorts.insert(s).second) continue;
        b.module.ops.push_back({pool_.issue_op("none-" + to_lower(s)), {}, s});
      }

      if (choice) predicate_guards(b, assignment, pattern(ctor), order, arg_sorts);
    } else {
      per_alternative_constructors(b, assignment, order, arg_sorts, arg_vars);
    }

    size_predicates(b, assignment, body);
  }

  // CHOICE, predicate mode: null constants per alternative and a valid?
  // observer that holds exactly when one alternative is present.
  void predicate_guards(ModuleBuilder& b, const asn::AsnTypeAssignment& assignment,
                        const cafe::Term& ctor_pattern,
                        const std::vector<const asn::NamedField*>& order,
                        const std::vector<std::string>& arg_sorts) {
    const std::string bool_sort = config_.target(asn::BuiltinKind::Boolean).sort;
    b.need_builtin(config_.target(asn::BuiltinKind::Boolean).module);

    std::vector<std::string> nulls;
    for (std::size_t i = 0; i < order.size(); ++i) {
      std::string null_name = pool_.issue_op("null-" + to_lower(order[i]->name));
      nulls.push_back(null_name);
      b.module.ops.push_back({null_name, {}, arg_sorts[i]});
    }
    std::string valid = pool_.issue_op("valid?");
    b.module.ops.push_back({valid, {mangle_sort(assignment.name)}, bool_sort});

    auto is_null = [&](std::size_t i) {
      return cafe::Term::apply("_==_",
                               {ctor_pattern.args[i], cafe::Term::apply(nulls[i])});
    };
    auto conjoin = [](std::vector<cafe::Term> parts) {
      cafe::Term acc = parts.front();
      for (std::size_t i = 1; i < parts.size(); ++i)
        acc = cafe::Term::apply("_and_", {acc, parts[i]});
      return acc;
    };

    for (std::size_t k = 0; k < order.size(); ++k) {
      std::vector<cafe::Term> parts;
      for (std::size_t j = 0; j < order.size(); ++j) {
        if (j == k)
          parts.push_back(cafe::Term::apply("not_", {is_null(j)}));
        else
          parts.push_back(is_null(j));
      }
      b.module.eqs.push_back({cafe::Term::apply(valid, {ctor_pattern}),
                              cafe::Term::boolean(true), conjoin(std::move(parts))});
    }
    b.module.eqs.push_back({cafe::Term::apply(valid, {ctor_pattern}),
                            cafe::Term::boolean(false), std::nullopt});
  }

  // CHOICE, constructor mode: one unary constructor and projection per
  // alternative; no null constants.
  void per_alternative_constructors(ModuleBuilder& b,
                                    const asn::AsnTypeAssignment& assignment,
                                    const std::vector<const asn::NamedField*>& order,
                                    const std::vector<std::string>& arg_sorts,
                                    const std::vector<std::string>& arg_vars) {
    const std::string type_sort = mangle_sort(assignment.name);
    for (std::size_t i = 0; i < order.size(); ++i) {
      std::string ctor = pool_.issue_op(mangle_constructor(assignment.name) + "." +
                                        to_lower(order[i]->name));
      std::string observer = pool_.issue_op(mangle_observer(order[i]->name));
      b.module.ops.push_back({ctor, {arg_sorts[i]}, type_sort});
      b.module.ops.push_back({observer, {type_sort}, arg_sorts[i]});
      cafe::Term arg = cafe::Term::var(arg_vars[i], arg_sorts[i]);
      b.module.eqs.push_back(
          {cafe::Term::apply(observer, {cafe::Term::apply(ctor, {arg})}), arg, std::nullopt});
    }
  }

  // SEQUENCE OF / SET OF: the NATLIST pattern over the element sort.
  void list_piece(ModuleBuilder& b, const asn::AsnTypeAssignment& assignment, bool absorbed) {
    const std::string type_sort = mangle_sort(assignment.name);
    const std::string elem_sort = field_sort(*assignment.body->element, config_);
    note_reference(b, *assignment.body->element, absorbed);

    if (!is_hidden_type(assignment.name)) b.module.visible_sorts.push_back({{type_sort}, ""});

    std::string nil = pool_.issue_op("nil");
    std::string cons = pool_.issue_op("_|_");
    std::string concat = pool_.issue_op("_@_");
    b.module.ops.push_back({nil, {}, type_sort});
    b.module.ops.push_back({cons, {elem_sort, type_sort}, type_sort});
    b.module.ops.push_back({concat, {type_sort, type_sort}, type_sort});

    std::string ev = b.var_for(pool_, elem_sort, 0);
    std::string l1 = b.var_for(pool_, type_sort, 0);
    std::string l2 = b.var_for(pool_, type_sort, 1);
    cafe::Term x = cafe::Term::var(ev, elem_sort);
    cafe::Term list1 = cafe::Term::var(l1, type_sort);
    cafe::Term list2 = cafe::Term::var(l2, type_sort);

    b.module.eqs.push_back(
        {cafe::Term::apply(concat, {cafe::Term::apply(nil), list2}), list2, std::nullopt});
    b.module.eqs.push_back(
        {cafe::Term::apply(concat, {cafe::Term::apply(cons, {x, list1}), list2}),
         cafe::Term::apply(cons, {x, cafe::Term::apply(concat, {list1, list2})}),
         std::nullopt});
  }

  // Alias: the new sort sits under its target sort.
  void alias_piece(ModuleBuilder& b, const asn::AsnTypeAssignment& assignment, bool absorbed) {
    const std::string type_sort = mangle_sort(assignment.name);
    const std::string target = field_sort(*assignment.body, config_);
    note_reference(b, *assignment.body, absorbed);

    std::string comment;
    if (assignment.body->kind == asn::AsnType::Kind::Builtin && assignment.body->size)
      comment = size_text(*assignment.body->size);

    if (is_hidden_type(assignment.name)) {
      // No subsort relation under a hidden sort.
    } else if (absorbed && target == mangle_sort(*plan_.hidden)) {
      b.module.visible_sorts.push_back({{type_sort}, comment});
    } else {
      b.module.subsort_decls.push_back(
          {sort_line_view(target, absorbed), {type_sort}, comment});
    }
    size_predicates(b, assignment, *assignment.body);
  }

  void size_predicates(ModuleBuilder& b, const asn::AsnTypeAssignment& assignment,
                       const asn::AsnType& body) {
    if (!config_.emit_size_predicates) return;
    bool constrained = body.kind == asn::AsnType::Kind::Builtin && body.size.has_value();
    if (body.structured())
      for (const auto& f : body.fields)
        constrained |= f.type->kind == asn::AsnType::Kind::Builtin && f.type->size.has_value();
    if (!constrained) return;
    b.need_builtin(config_.target(asn::BuiltinKind::Boolean).module);
    b.need_builtin(config_.target(asn::BuiltinKind::NumericString).module);
    b.module.ops.push_back({pool_.issue_op("sizeok-" + to_lower(assignment.name)),
                            {config_.target(asn::BuiltinKind::NumericString).sort},
                            config_.target(asn::BuiltinKind::Boolean).sort});
  }
};

inline void finalize_imports(ModuleBuilder& b, const std::vector<std::string>& stub_modules) {
  std::set<std::string> present;
  for (const auto& name : prelude_order())
    if (std::find(b.builtin_imports.begin(), b.builtin_imports.end(), name) !=
        b.builtin_imports.end()) {
      b.module.imports.push_back({cafe::ImportMode::Protecting, name});
      present.insert(name);
    }
  for (const auto& name : b.user_imports)
    if (present.insert(name).second)
      b.module.imports.push_back({cafe::ImportMode::Protecting, name});
  for (const auto& name : stub_modules)
    if (name != b.module.name && present.insert(name).second)
      b.module.imports.push_back({cafe::ImportMode::Protecting, name});
}

}  // namespace detail

// Standalone per-type translations (Rule 3a/5a/5b/6 for records, the CHOICE
// guards, and the list pattern). The schema provides reference context only.
inline cafe::CafeModule translate_sequence(const asn::ResolvedSchema& schema,
                                           const asn::AsnTypeAssignment& assignment,
                                           const TranslationConfig& config, NamePool& pool) {
  TranslationPlan plan;
  plan.schema = &schema;
  plan.config = &config;
  detail::ModuleBuilder b;
  b.module.name = mangle_module(assignment.name);
  b.module.semantics = config.module_semantics;
  detail::Translator t(schema, config, plan, pool);
  t.translate_into(b, assignment, /*absorbed=*/false);
  detail::finalize_imports(b, {});
  return std::move(b.module);
}

inline cafe::CafeModule translate_choice(const asn::ResolvedSchema& schema,
                                         const asn::AsnTypeAssignment& assignment,
                                         const TranslationConfig& config, NamePool& pool) {
  return translate_sequence(schema, assignment, config, pool);
}

inline cafe::CafeModule translate_seq_of(const asn::ResolvedSchema& schema,
                                         const asn::AsnTypeAssignment& assignment,
                                         const TranslationConfig& config, NamePool& pool) {
  return translate_sequence(schema, assignment, config, pool);
}

inline Result<cafe::CafeFile> translate_schema(const asn::ResolvedSchema& schema,
                                               const TranslationConfig& config) {
  auto planned = plan_translation(schema, config);
  if (!planned.ok()) return Result<cafe::CafeFile>::failure(std::move(planned.diagnostics));
  const TranslationPlan& plan = *planned;
  Diagnostics diags = std::move(planned.diagnostics);

  NamePool pool;
  detail::Translator translator(schema, config, plan, pool);

  std::vector<std::string> stub_modules;
  for (const auto& name : schema.imported_names) stub_modules.push_back(mangle_module(name));

  std::map<std::string, detail::ModuleBuilder> builders;  // by module name
  std::vector<std::string> builder_order;

  auto builder_at = [&](const std::string& module_name, int position) -> detail::ModuleBuilder& {
    auto it = builders.find(module_name);
    if (it == builders.end()) {
      detail::ModuleBuilder b;
      b.module.name = module_name;
      b.module.semantics = config.module_semantics;
      b.position = position;
      it = builders.emplace(module_name, std::move(b)).first;
      builder_order.push_back(module_name);
    }
    return it->second;
  };

  const auto& assignments = schema.module.assignments;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    const auto& assignment = assignments[i];
    bool absorbed = plan.hidden && plan.is_merged(assignment.name);
    std::string module_name = plan.module_of(assignment.name);
    for (const auto& prelude : detail::prelude_order()) {
      if (module_name == prelude) {
        diags.push_back(error_at(assignment.source_position,
                                 "type " + assignment.name +
                                     " collides with the builtin module " + prelude));
        return Result<cafe::CafeFile>::failure(std::move(diags));
      }
    }
    if (!absorbed && std::find(stub_modules.begin(), stub_modules.end(), module_name) !=
                         stub_modules.end()) {
      diags.push_back(error_at(assignment.source_position,
                               "type " + assignment.name +
                                   " collides with an imported type's stub module"));
      return Result<cafe::CafeFile>::failure(std::move(diags));
    }
    bool fresh = builders.find(module_name) == builders.end();
    detail::ModuleBuilder& b = builder_at(module_name, static_cast<int>(i));
    if (!absorbed && !fresh) {
      diags.push_back(error_at(assignment.source_position,
                               "module name collision for type " + assignment.name));
      return Result<cafe::CafeFile>::failure(std::move(diags));
    }
    if (absorbed && b.module.hidden_sorts.empty()) {
      b.module.hidden_sorts.push_back(mangle_sort(*plan.hidden));
      // The hidden type's components become plain visible sorts, shown as
      // their data view.
      const asn::AsnTypeAssignment* h = schema.find(*plan.hidden);
      cafe::VisibleLine line;
      auto add = [&](const std::string& sort) {
        std::string view = plan.data_view(sort);
        if (std::find(line.sorts.begin(), line.sorts.end(), view) == line.sorts.end())
          line.sorts.push_back(view);
      };
      if (h->body->structured())
        for (const auto& f : h->body->fields) add(field_sort(*f.type, config));
      else if (h->body->list_like())
        add(field_sort(*h->body->element, config));
      else
        add(field_sort(*h->body, config));
      if (!line.sorts.empty()) b.module.visible_sorts.push_back(std::move(line));
    }
    translator.translate_into(b, assignment, absorbed);
  }

  // Finish modules: import lines, the OTS stub in the hidden module, and a
  // safety net declaring any sort a merged member uses that no line or import
  // provides yet.
  for (auto& name : builder_order) {
    detail::ModuleBuilder& b = builders.at(name);
    bool is_hidden_module = !b.module.hidden_sorts.empty();
    detail::finalize_imports(b, is_hidden_module ? std::vector<std::string>{} : stub_modules);
    if (is_hidden_module) {
      std::set<std::string> provided(b.module.hidden_sorts.begin(),
                                     b.module.hidden_sorts.end());
      for (const auto& line : b.module.visible_sorts)
        for (const auto& s : line.sorts) provided.insert(s);
      for (const auto& d : b.module.subsort_decls) {
        provided.insert(d.super);
        for (const auto& s : d.subs) provided.insert(s);
      }
      for (const auto& imp : b.module.imports) {
        // Prelude sorts and whole imported record modules.
        for (const auto& prelude : detail::prelude_order())
          if (imp.module == prelude) {
            for (const auto& [kind, target] : config.builtin_map)
              if (target.module == prelude) provided.insert(target.sort);
          }
        for (const auto& other : builder_order) {
          if (builders.at(other).module.name != imp.module) continue;
          const cafe::CafeModule& m = builders.at(other).module;
          for (const auto& line : m.visible_sorts)
            for (const auto& s : line.sorts) provided.insert(s);
          for (const auto& d : m.subsort_decls) {
            provided.insert(d.super);
            for (const auto& s : d.subs) provided.insert(s);
          }
        }
      }
      cafe::VisibleLine leftovers;
      auto require = [&](const std::string& s) {
        if (provided.count(s)) return;
        if (std::find(leftovers.sorts.begin(), leftovers.sorts.end(), s) !=
            leftovers.sorts.end())
          return;
        leftovers.sorts.push_back(s);
      };
      for (const auto& op : b.module.ops) {
        for (const auto& s : op.arg_sorts) require(s);
        require(op.result_sort);
      }
      for (const auto& v : b.module.vars) require(v.sort);
      if (!leftovers.sorts.empty()) b.module.visible_sorts.push_back(std::move(leftovers));
      b.module.comments.push_back("OTS actions: define action operators and observers here");
    }
  }

  cafe::CafeFile file;
  file.file_name = mangle_module(schema.module.name) + ".mod";

  // Prelude modules for every builtin actually imported.
  std::set<std::string> used_builtins;
  for (const auto& name : builder_order)
    for (const auto& m : builders.at(name).builtin_imports) used_builtins.insert(m);
  for (const auto& prelude : detail::prelude_order()) {
    if (!used_builtins.count(prelude)) continue;
    cafe::CafeModule m;
    m.name = prelude;
    m.builtin_prelude = true;
    cafe::VisibleLine line;
    for (const auto& [kind, target] : config.builtin_map)
      if (target.module == prelude &&
          std::find(line.sorts.begin(), line.sorts.end(), target.sort) == line.sorts.end())
        line.sorts.push_back(target.sort);
    m.visible_sorts.push_back(std::move(line));
    file.modules.push_back(std::move(m));
  }

  // Rule 4 stubs, in import order.
  for (std::size_t i = 0; i < schema.imported_names.size(); ++i) {
    cafe::CafeModule m;
    m.name = stub_modules[i];
    m.import_stub = true;
    m.visible_sorts.push_back({{mangle_sort(schema.imported_names[i])}, ""});
    file.modules.push_back(std::move(m));
  }

  // Generated modules in topological order; ties broken by schema position.
  {
    std::map<std::string, std::set<std::string>> waits_on;
    for (const auto& name : builder_order) {
      auto& deps = waits_on[name];
      for (const auto& imp : builders.at(name).module.imports)
        if (builders.count(imp.module)) deps.insert(imp.module);
    }
    std::set<std::string> emitted;
    while (emitted.size() < builder_order.size()) {
      std::string best;
      int best_pos = 0;
      for (const auto& name : builder_order) {
        if (emitted.count(name)) continue;
        bool ready = true;
        for (const auto& dep : waits_on[name])
          if (!emitted.count(dep)) ready = false;
        if (!ready) continue;
        if (best.empty() || builders.at(name).position < best_pos) {
          best = name;
          best_pos = builders.at(name).position;
        }
      }
      if (best.empty()) {
        diags.push_back(error_at({1, 1}, "cyclic module imports in generated file"));
        return Result<cafe::CafeFile>::failure(std::move(diags));
      }
      emitted.insert(best);
      file.modules.push_back(builders.at(best).module);
    }
  }

  return Result<cafe::CafeFile>::success(std::move(file), std::move(diags));
}

}  // namespace asn2cafe::transform
