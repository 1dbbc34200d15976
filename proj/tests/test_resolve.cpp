#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

#include "asn2cafe/asn/parser.hpp"
#include "asn2cafe/asn/resolve.hpp"
#include "support/fixtures.hpp"

using namespace asn2cafe;

namespace {

bool has_edge(const asn::ResolvedSchema& schema, const std::string& from,
              const std::string& to) {
  return std::find(schema.edges.begin(), schema.edges.end(), std::make_pair(from, to)) !=
         schema.edges.end();
}

}  // namespace

TEST_CASE("banking schema resolves with the expected dependency edges") {
  auto schema = support::load_schema("banking.asn1");
  CHECK(has_edge(schema, "Account", "Client"));
  CHECK(has_edge(schema, "Account", "Balance"));
  CHECK(has_edge(schema, "Account", "Iban"));
  CHECK(has_edge(schema, "Deposit", "Account"));
  CHECK(has_edge(schema, "Deposit", "ClientID"));
  CHECK(has_edge(schema, "Deposit", "Date"));
  CHECK(has_edge(schema, "Withdraw", "Account"));
  CHECK(has_edge(schema, "Balance", "Iban"));
  CHECK_FALSE(has_edge(schema, "Client", "Account"));
}

TEST_CASE("self-contained type yields one node and no edges") {
  auto parsed = asn::parse_text("A ::= SEQUENCE { x INTEGER }", "t");
  REQUIRE(parsed.ok());
  auto schema = asn::resolve_references(*parsed);
  REQUIRE(schema.ok());
  CHECK(schema->module.assignments.size() == 1);
  CHECK(schema->edges.empty());
}

TEST_CASE("unresolved references are named") {
  auto parsed = asn::parse_text("A ::= B", "t");
  REQUIRE(parsed.ok());
  auto schema = asn::resolve_references(*parsed);
  REQUIRE_FALSE(schema.ok());
  REQUIRE_FALSE(schema.diagnostics.empty());
  CHECK(schema.diagnostics[0].message == "unresolved type reference B");
}

TEST_CASE("reference cycles are reported with the cycle") {
  auto parsed = asn::parse_text(
      "A ::= SEQUENCE { b B }\nB ::= SEQUENCE { c C }\nC ::= SEQUENCE { a A }", "t");
  REQUIRE(parsed.ok());
  auto schema = asn::resolve_references(*parsed);
  REQUIRE_FALSE(schema.ok());
  CHECK(schema.diagnostics[0].message.find("cycle") != std::string::npos);
  CHECK(schema.diagnostics[0].message.find("A") != std::string::npos);
}

TEST_CASE("direct recursion is rejected") {
  auto parsed = asn::parse_text("A ::= SEQUENCE { next A }", "t");
  REQUIRE(parsed.ok());
  auto schema = asn::resolve_references(*parsed);
  REQUIRE_FALSE(schema.ok());
}

TEST_CASE("forward references are fine") {
  auto parsed = asn::parse_text("A ::= SEQUENCE { b B }\nB ::= INTEGER", "t");
  REQUIRE(parsed.ok());
  CHECK(asn::resolve_references(*parsed).ok());
}

TEST_CASE("anonymous nested types are lifted to Parent-fieldname") {
  auto schema = support::load_schema("payment.asn1");
  const auto* lifted = schema.find("Payment-method-credit-card");
  REQUIRE(lifted != nullptr);
  CHECK(lifted->body->kind == asn::AsnType::Kind::Sequence);
  // The parent now references the synthetic type.
  const auto* parent = schema.find("Payment-method");
  REQUIRE(parent != nullptr);
  CHECK(parent->body->fields[1].type->kind == asn::AsnType::Kind::Reference);
  CHECK(parent->body->fields[1].type->ref_name == "Payment-method-credit-card");
  CHECK(has_edge(schema, "Payment-method", "Payment-method-credit-card"));
  // Synthetic definitions precede their parent.
  const auto& assignments = schema.module.assignments;
  auto index_of = [&](const std::string& name) {
    for (std::size_t i = 0; i < assignments.size(); ++i)
      if (assignments[i].name == name) return i;
    return assignments.size();
  };
  CHECK(index_of("Payment-method-credit-card") < index_of("Payment-method"));
}

TEST_CASE("nested list elements are lifted to Name-elem") {
  auto parsed = asn::parse_text("Ns ::= SEQUENCE OF SEQUENCE OF INTEGER", "t");
  REQUIRE(parsed.ok());
  auto schema = asn::resolve_references(*parsed);
  REQUIRE(schema.ok());
  const auto* elem = schema->find("Ns-elem");
  REQUIRE(elem != nullptr);
  CHECK(elem->body->kind == asn::AsnType::Kind::SequenceOf);
  CHECK(schema->find("Ns")->body->element->ref_name == "Ns-elem");
}

TEST_CASE("imported names satisfy references and are recorded in order") {
  auto schema = support::load_schema("imports.asn1");
  CHECK(schema.imported_names == std::vector<std::string>{"Amount", "Currency"});
  CHECK(schema.imported("Amount"));
  CHECK_FALSE(schema.imported("Price"));
}

TEST_CASE("abstract syntax must name a known type") {
  auto parsed = asn::parse_text(
      "x ABSTRACT-SYNTAX ::= { Missing IDENTIFIED BY y }\nA ::= INTEGER", "t");
  REQUIRE(parsed.ok());
  auto schema = asn::resolve_references(*parsed);
  REQUIRE_FALSE(schema.ok());
  CHECK(schema.diagnostics[0].message.find("Missing") != std::string::npos);
}
