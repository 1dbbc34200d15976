#include <CLI11.hpp>

#include "asn2cafe/cli.hpp"

using asn2cafe::cli::CliInvocation;

int main(int argc, char** argv) {
  CLI::App app{"asn2cafe: translate ASN.1 schemas into CafeOBJ specification modules"};
  app.require_subcommand(1);

  CliInvocation invocation;
  std::string choice_guards = "predicate";
  std::string report = "text";

  auto add_translate_flags = [&](CLI::App* cmd) {
    cmd->add_option("--hidden-sort", invocation.hidden_sort,
                    "type whose module becomes the hidden state sort");
    cmd->add_flag("--infer-hidden", invocation.infer_hidden,
                  "use the ABSTRACT-SYNTAX top-level type as the hidden sort");
    cmd->add_option("--choice-guards", choice_guards, "predicate|constructors")
        ->check(CLI::IsMember({"predicate", "constructors"}));
    cmd->add_flag("--emit-size-predicates", invocation.emit_size_predicates,
                  "emit sizeok-* predicate stubs for SIZE constraints");
    cmd->add_flag("--tight", invocation.tight, "emit mod! (tight semantics) module headers");
  };

  CLI::App* translate = app.add_subcommand("translate", "translate a schema to a .mod file");
  translate->add_option("input", invocation.input_path, "ASN.1 schema (.asn/.asn1)")
      ->required();
  translate->add_option("-o,--output", invocation.output_path, "output path");
  add_translate_flags(translate);

  CLI::App* check = app.add_subcommand("check", "re-derive and verify a translation");
  check->add_option("input", invocation.input_path, "ASN.1 schema (.asn/.asn1)")->required();
  check->add_option("-o,--output", invocation.output_path, "generated .mod to verify against");
  check->add_option("--report", report, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  add_translate_flags(check);

  CLI::App* reduce = app.add_subcommand("reduce", "reduce a term to normal form");
  reduce->add_option("term", invocation.term, "term to reduce")->required();
  reduce->add_option("input", invocation.input_path, "schema providing the equations");
  reduce->add_option("--fixture", invocation.fixture, "built-in system (natlist)");
  reduce->add_option("--step-limit", invocation.step_limit, "rewrite step budget");
  add_translate_flags(reduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (translate->parsed()) invocation.command = CliInvocation::Command::Translate;
  if (check->parsed()) invocation.command = CliInvocation::Command::Check;
  if (reduce->parsed()) {
    invocation.command = CliInvocation::Command::Reduce;
    if (invocation.fixture.empty() && invocation.input_path.empty()) {
      std::cerr << "reduce needs a schema or --fixture natlist\n";
      return 2;
    }
  }
  invocation.choice_guards = choice_guards == "constructors"
                                 ? asn2cafe::transform::ChoiceGuardMode::PerAlternativeConstructor
                                 : asn2cafe::transform::ChoiceGuardMode::Predicate;
  invocation.report_format = report == "json" ? CliInvocation::ReportFormat::Json
                                              : CliInvocation::ReportFormat::Text;

  try {
    return asn2cafe::cli::run(invocation);
  } catch (const std::exception& e) {
    std::cerr << "asn2cafe: " << e.what() << "\n";
    return 2;
  }
}
