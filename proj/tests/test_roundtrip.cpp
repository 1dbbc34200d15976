// Parse -> print -> parse must reach a structural fixpoint, on the checked-in
// fixtures and on generated schemas of every supported shape.
#include <catch2/catch_amalgamated.hpp>

#include "asn2cafe/asn/parser.hpp"
#include "asn2cafe/asn/printer.hpp"
#include "support/fixtures.hpp"
#include "support/schema_gen.hpp"

using namespace asn2cafe;

namespace {

void check_roundtrip(const asn::AsnModule& module) {
  std::string printed = asn::print_module(module);
  auto reparsed = asn::parse_text(printed, module.name);
  if (!reparsed.ok()) {
    UNSCOPED_INFO(printed);
    for (const auto& d : reparsed.diagnostics) UNSCOPED_INFO(d.message);
  }
  REQUIRE(reparsed.ok());
  if (!asn::equals(module, *reparsed)) UNSCOPED_INFO(printed);
  CHECK(asn::equals(module, *reparsed));
}

}  // namespace

TEST_CASE("fixtures round-trip through the printer") {
  for (const char* name : {"client.asn1", "banking.asn1", "payment.asn1", "imports.asn1"}) {
    std::string stem(name);
    stem = stem.substr(0, stem.find('.'));
    auto parsed = asn::parse_text(support::read_fixture(name), stem);
    REQUIRE(parsed.ok());
    check_roundtrip(*parsed);
  }
}

TEST_CASE("generated schemas round-trip") {
  support::Rng rng(20260801);
  support::GenOptions options;
  options.rich = true;
  for (int i = 0; i < 60; ++i) {
    auto module = support::random_schema(rng, options);
    check_roundtrip(module);
  }
}

TEST_CASE("parsing is deterministic") {
  std::string text = support::read_fixture("banking.asn1");
  auto first = asn::parse_text(text, "banking");
  auto second = asn::parse_text(text, "banking");
  REQUIRE(first.ok());
  REQUIRE(second.ok());
  CHECK(asn::equals(*first, *second));
  CHECK(first.diagnostics.size() == second.diagnostics.size());
}
