// Command-line pipeline: translate (ASN.1 -> .mod with a self-check), check
// (re-derive and compare, with tamper detection via a .mod.meta hash sidecar)
// and reduce (run the rewrite engine over a translated schema or the built-in
// NATLIST fixture).
//
// Exit codes: 0 success / report Pass, 1 diagnostics or report Fail, 2 usage
// errors such as an unreadable input file.
#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "asn2cafe/asn/parser.hpp"
#include "asn2cafe/asn/resolve.hpp"
#include "asn2cafe/cafe/printer.hpp"
#include "asn2cafe/check/correspondence.hpp"
#include "asn2cafe/check/wellformed.hpp"
#include "asn2cafe/rewrite/natlist.hpp"
#include "asn2cafe/rewrite/reduce.hpp"
#include "asn2cafe/rewrite/term_parser.hpp"
#include "asn2cafe/transform/translate.hpp"

namespace asn2cafe::cli {

struct CliInvocation {
  enum class Command { Translate, Check, Reduce };
  enum class ReportFormat { Text, Json };

  Command command = Command::Translate;
  std::string input_path;
  std::string output_path;  // default: input stem + ".mod"
  std::string fixture;      // reduce: "natlist"
  std::string term;         // reduce
  ReportFormat report_format = ReportFormat::Text;
  std::size_t step_limit = rewrite::default_step_limit;

  std::optional<std::string> hidden_sort;
  bool infer_hidden = false;
  bool emit_size_predicates = false;
  bool tight = false;
  transform::ChoiceGuardMode choice_guards = transform::ChoiceGuardMode::Predicate;

  transform::TranslationConfig translation_config() const {
    transform::TranslationConfig config;
    config.hidden_sort = hidden_sort;
    config.infer_hidden_from_abstract_syntax = infer_hidden;
    config.emit_size_predicates = emit_size_predicates;
    config.choice_guard_mode = choice_guards;
    if (tight) config.module_semantics = cafe::CafeModule::Semantics::Tight;
    return config;
  }
};

namespace detail {

inline std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string content_hash(std::string_view data) {
  std::ostringstream out;
  out << std::hex << fnv1a(data);
  return out.str();
}

inline void print_diagnostics(const Diagnostics& diags, const std::string& file) {
  for (const auto& d : diags) std::cerr << format_diagnostic(d, file) << "\n";
}

inline std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string stem_of(const std::string& path) {
  std::string stem = std::filesystem::path(path).stem().string();
  return stem.empty() ? "Schema" : stem;
}

struct Pipeline {
  asn::ResolvedSchema schema;
  cafe::CafeFile file;
};

// parse -> resolve -> translate, with diagnostics routed to stderr.
inline std::optional<Pipeline> build(const CliInvocation& invocation, int& exit_code) {
  auto source = read_file(invocation.input_path);
  if (!source) {
    std::cerr << "cannot read " << invocation.input_path << "\n";
    exit_code = 2;
    return std::nullopt;
  }
  auto parsed = asn::parse_text(*source, stem_of(invocation.input_path));
  print_diagnostics(parsed.diagnostics, invocation.input_path);
  if (!parsed.ok()) {
    exit_code = 1;
    return std::nullopt;
  }
  auto resolved = asn::resolve_references(*parsed);
  print_diagnostics(resolved.diagnostics, invocation.input_path);
  if (!resolved.ok()) {
    exit_code = 1;
    return std::nullopt;
  }
  auto translated = transform::translate_schema(*resolved, invocation.translation_config());
  print_diagnostics(translated.diagnostics, invocation.input_path);
  if (!translated.ok()) {
    exit_code = 1;
    return std::nullopt;
  }
  return Pipeline{std::move(*resolved), std::move(*translated)};
}

inline std::string default_output(const CliInvocation& invocation) {
  if (!invocation.output_path.empty()) return invocation.output_path;
  std::filesystem::path p(invocation.input_path);
  p.replace_extension(".mod");
  return p.string();
}

inline int run_translate(const CliInvocation& invocation) {
  int exit_code = 0;
  auto pipeline = build(invocation, exit_code);
  if (!pipeline) return exit_code;

  // Self-check: never write a file that fails the checker suite.
  Diagnostics wf = check::check_wellformed(pipeline->file);
  auto report = check::check_correspondence(pipeline->schema, pipeline->file,
                                            invocation.translation_config());
  if (has_errors(wf) || !report.pass()) {
    print_diagnostics(wf, invocation.input_path);
    std::cerr << report.to_text();
    std::cerr << "self-check failed; no output written\n";
    return 1;
  }

  std::string text = cafe::pretty_print(pipeline->file);
  std::string out_path = default_output(invocation);
  {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    out << text;
  }
  std::ofstream meta(out_path + ".meta", std::ios::binary);
  meta << content_hash(text) << "\n";
  return 0;
}

inline int run_check(const CliInvocation& invocation) {
  int exit_code = 0;
  auto pipeline = build(invocation, exit_code);
  if (!pipeline) return exit_code;

  auto report = check::check_correspondence(pipeline->schema, pipeline->file,
                                            invocation.translation_config());
  Diagnostics wf = check::check_wellformed(pipeline->file);
  report.diagnostics.insert(report.diagnostics.end(), wf.begin(), wf.end());

  // Tamper detection against a previously written .mod + sidecar.
  std::string out_path = default_output(invocation);
  if (auto existing = read_file(out_path)) {
    std::string expected = content_hash(cafe::pretty_print(pipeline->file));
    std::string recorded;
    if (auto meta = read_file(out_path + ".meta")) {
      recorded = *meta;
      while (!recorded.empty() && (recorded.back() == '\n' || recorded.back() == '\r'))
        recorded.pop_back();
    }
    std::string actual = content_hash(*existing);
    if (actual != expected)
      report.diagnostics.push_back(
          error_at({1, 1}, out_path + " does not match the translation of " +
                               invocation.input_path));
    else if (!recorded.empty() && recorded != actual)
      report.diagnostics.push_back(
          error_at({1, 1}, out_path + " does not match its .meta sidecar hash"));
  }
  if (has_errors(report.diagnostics)) report.verdict = check::CorrespondenceReport::Verdict::Fail;

  if (invocation.report_format == CliInvocation::ReportFormat::Json)
    std::cout << report.to_json().dump(2) << "\n";
  else
    std::cout << report.to_text();
  return report.pass() ? 0 : 1;
}

inline int run_reduce(const CliInvocation& invocation) {
  rewrite::RewriteSystem system;
  if (invocation.fixture == "natlist") {
    system = rewrite::natlist_system();
  } else if (!invocation.fixture.empty()) {
    std::cerr << "unknown fixture " << invocation.fixture << "\n";
    return 2;
  } else {
    int exit_code = 0;
    auto pipeline = build(invocation, exit_code);
    if (!pipeline) return exit_code;
    Diagnostics warnings;
    system = rewrite::RewriteSystem::from_file(pipeline->file, &warnings);
    print_diagnostics(warnings, invocation.input_path);
  }

  auto term = rewrite::parse_term(invocation.term, system.signature);
  if (!term.ok()) {
    print_diagnostics(term.diagnostics, "");
    return 1;
  }
  auto result = rewrite::reduce(*term, system, invocation.step_limit);
  if (result.status == rewrite::ReduceResult::Status::StepLimitExceeded) {
    std::cerr << "step limit " << invocation.step_limit
              << " exceeded; reduction is likely nonterminating\n";
    return 1;
  }
  std::cout << cafe::print_term(result.normal_form) << "\n";
  return 0;
}

}  // namespace detail

inline int run(const CliInvocation& invocation) {
  switch (invocation.command) {
    case CliInvocation::Command::Translate: return detail::run_translate(invocation);
    case CliInvocation::Command::Check: return detail::run_check(invocation);
    case CliInvocation::Command::Reduce: return detail::run_reduce(invocation);
  }
  return 2;
}

}  // namespace asn2cafe::cli
