// Hidden-sort selection: the Figure-10-style state module that absorbs every
// type reaching the hidden one.
#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <map>
#include <tuple>

#include "asn2cafe/asn/parser.hpp"
#include "asn2cafe/cafe/printer.hpp"
#include "asn2cafe/check/wellformed.hpp"
#include "asn2cafe/transform/translate.hpp"
#include "support/cafe_tokens.hpp"
#include "support/fixtures.hpp"

using namespace asn2cafe;
using cafe::CafeModule;

namespace {

cafe::CafeFile translate_banking(std::optional<std::string> hidden) {
  auto schema = support::load_schema("banking.asn1");
  transform::TranslationConfig config;
  config.hidden_sort = hidden;
  auto file = transform::translate_schema(schema, config);
  REQUIRE(file.ok());
  return *file;
}

using OpShape = std::tuple<std::string, std::size_t, std::string>;

std::multiset<OpShape> op_shapes(const cafe::CafeFile& file) {
  std::multiset<OpShape> shapes;
  for (const auto& m : file.modules)
    for (const auto& op : m.ops)
      shapes.insert({op.name, op.arg_sorts.size(), op.result_sort});
  return shapes;
}

}  // namespace

TEST_CASE("account module absorbs the transaction types") {
  auto file = translate_banking("Account");
  const CafeModule* account = file.find("ACCOUNT");
  REQUIRE(account != nullptr);

  std::string text = cafe::print_module(*account);
  for (const char* line : {
           "pr(INT + CLIENT)",
           "*[Account]*",
           "[Iban ClientID Balance]",
           "[Deposit > ClientID Iban Date Int]",
           "[Withdraw > ClientID Iban Date Int]",
           "op withdraw : Account ClientID Date Int -> Withdraw",
           "op returnaccount2 : Withdraw -> Account",
           "op returnclientid3 : Withdraw -> ClientID",
           "op returndate2 : Withdraw -> Date",
           "op returnamount2 : Withdraw -> Int",
           "eq withdraw(aaccount, aclientid, adate, aint) = awithdraw .",
           "eq returnaccount2(withdraw(aaccount, aclientid, adate, aint)) = aaccount .",
           "eq returnclientid3(withdraw(aaccount, aclientid, adate, aint)) = aclientid .",
           "eq returndate2(withdraw(aaccount, aclientid, adate, aint)) = adate .",
           "eq returnamount2(withdraw(aaccount, aclientid, adate, aint)) = aint .",
       }) {
    INFO(line);
    CHECK(support::has_token_line(text, line));
  }

  // Exactly the two imports the figure shows.
  REQUIRE(account->imports.size() == 2);
  CHECK(account->imports[0].module == "INT");
  CHECK(account->imports[1].module == "CLIENT");

  // Deposit and Withdraw no longer have modules of their own; Balance does.
  CHECK(file.find("DEPOSIT") == nullptr);
  CHECK(file.find("WITHDRAW") == nullptr);
  CHECK(file.find("BALANCE") != nullptr);

  // No subsort declaration headed by the hidden sort.
  for (const auto& decl : account->subsort_decls) CHECK(decl.super != "Account");

  // The OTS extension point is marked.
  REQUIRE_FALSE(account->comments.empty());
  CHECK(account->comments[0].find("OTS actions") != std::string::npos);

  CHECK(check::check_wellformed(file).empty());
}

TEST_CASE("without a hidden sort the record types keep separate modules") {
  auto file = translate_banking(std::nullopt);
  for (const char* name : {"CLIENT", "ACCOUNT", "BALANCE", "DEPOSIT", "WITHDRAW"}) {
    INFO(name);
    const CafeModule* m = file.find(name);
    REQUIRE(m != nullptr);
    CHECK(m->hidden_sorts.empty());
  }
  // Unmerged Deposit keeps its declared component order.
  const cafe::OpDecl* deposit = file.find("DEPOSIT")->find_op("deposit");
  REQUIRE(deposit != nullptr);
  CHECK(deposit->arg_sorts ==
        std::vector<std::string>{"ClientID", "Account", "Date", "Int"});
}

TEST_CASE("merging preserves the operator signature multiset") {
  auto merged = translate_banking("Account");
  auto flat = translate_banking(std::nullopt);
  CHECK(op_shapes(merged) == op_shapes(flat));
}

TEST_CASE("an unknown hidden sort is an error") {
  auto schema = support::load_schema("banking.asn1");
  transform::TranslationConfig config;
  config.hidden_sort = "Nowhere";
  auto file = transform::translate_schema(schema, config);
  REQUIRE_FALSE(file.ok());
  CHECK(file.diagnostics[0].message.find("Nowhere") != std::string::npos);
}

TEST_CASE("abstract syntax drives the hidden sort only behind the flag") {
  auto parsed = asn::parse_text(
      "x ABSTRACT-SYNTAX ::= { Top IDENTIFIED BY y }\n"
      "Top ::= SEQUENCE { a Sub, b INTEGER }\n"
      "Sub ::= SEQUENCE { c INTEGER }",
      "t");
  REQUIRE(parsed.ok());
  auto schema = asn::resolve_references(*parsed);
  REQUIRE(schema.ok());

  transform::TranslationConfig config;
  auto plain = transform::translate_schema(*schema, config);
  REQUIRE(plain.ok());
  CHECK(plain->find("TOP")->hidden_sorts.empty());

  config.infer_hidden_from_abstract_syntax = true;
  auto inferred = transform::translate_schema(*schema, config);
  REQUIRE(inferred.ok());
  CHECK(inferred->find("TOP")->hidden_sorts ==
        std::vector<std::string>{"Top"});
  bool warned = false;
  for (const auto& d : inferred.diagnostics)
    warned |= d.severity == Severity::Warning &&
              d.message.find("hidden sort") != std::string::npos;
  CHECK(warned);
}

TEST_CASE("hidden sorts work on aliases, lists and choices") {
  struct Case {
    const char* text;
    const char* hidden;
  };
  for (const Case& c : {
           Case{"D ::= NumericString (SIZE (8))", "D"},
           Case{"L ::= SEQUENCE OF INTEGER", "L"},
           Case{"State ::= SEQUENCE { v INTEGER }\n"
                "Pick ::= CHOICE { a State, b INTEGER }",
                "State"},
       }) {
    INFO(c.text);
    auto parsed = asn::parse_text(c.text, "t");
    REQUIRE(parsed.ok());
    auto schema = asn::resolve_references(*parsed);
    REQUIRE(schema.ok());
    transform::TranslationConfig config;
    config.hidden_sort = c.hidden;
    auto file = transform::translate_schema(*schema, config);
    REQUIRE(file.ok());
    const CafeModule* m = file->find(transform::mangle_module(c.hidden));
    REQUIRE(m != nullptr);
    CHECK(m->hidden_sorts == std::vector<std::string>{c.hidden});
    for (const auto& decl : m->subsort_decls) CHECK(decl.super != c.hidden);
    auto diags = check::check_wellformed(*file);
    for (const auto& d : diags) UNSCOPED_INFO(d.message);
    CHECK(diags.empty());
  }
}

TEST_CASE("indirect users of the hidden type are absorbed too") {
  auto parsed = asn::parse_text(
      "State ::= SEQUENCE { v INTEGER }\n"
      "Move ::= SEQUENCE { s State, n INTEGER }\n"
      "Log ::= SEQUENCE { m Move, note BOOLEAN }",
      "t");
  REQUIRE(parsed.ok());
  auto schema = asn::resolve_references(*parsed);
  REQUIRE(schema.ok());
  transform::TranslationConfig config;
  config.hidden_sort = "State";
  auto file = transform::translate_schema(*schema, config);
  REQUIRE(file.ok());
  CHECK(file->find("MOVE") == nullptr);
  CHECK(file->find("LOG") == nullptr);
  const CafeModule* state = file->find("STATE");
  REQUIRE(state != nullptr);
  CHECK(state->find_op("move") != nullptr);
  CHECK(state->find_op("log") != nullptr);
  // Constructors of absorbed types take the state(-bearing) argument first.
  CHECK(state->find_op("move")->arg_sorts ==
        std::vector<std::string>{"State", "Int"});
  CHECK(check::check_wellformed(*file).empty());
}
