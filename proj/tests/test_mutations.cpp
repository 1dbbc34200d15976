// Every catalogue mutation applied to a generated file must be caught by
// check_correspondence or check_wellformed.
#include <catch2/catch_amalgamated.hpp>

#include "asn2cafe/check/correspondence.hpp"
#include "asn2cafe/check/wellformed.hpp"
#include "asn2cafe/transform/translate.hpp"
#include "support/fixtures.hpp"
#include "support/mutations.hpp"
#include "support/schema_gen.hpp"

using namespace asn2cafe;

namespace {

bool detected(const asn::ResolvedSchema& schema, const cafe::CafeFile& file,
              const transform::TranslationConfig& config) {
  auto report = check::check_correspondence(schema, file, config);
  if (!report.pass()) return true;
  return has_errors(check::check_wellformed(file));
}

}  // namespace

TEST_CASE("all twelve mutations are killed on the banking file") {
  auto schema = support::load_schema("banking.asn1");
  transform::TranslationConfig config;
  auto file = transform::translate_schema(schema, config);
  REQUIRE(file.ok());
  REQUIRE(detected(schema, *file, config) == false);

  for (const auto& mutation : support::mutation_catalogue()) {
    INFO(mutation.name);
    auto mutated = mutation.apply(*file);
    REQUIRE(mutated.has_value());
    CHECK(detected(schema, *mutated, config));
  }
}

TEST_CASE("all twelve mutations are killed on generated schemas") {
  support::Rng rng(424242);
  support::GenOptions options;
  options.min_types = 2;
  options.min_fields = 2;
  for (int round = 0; round < 3; ++round) {
    auto module = support::random_schema(rng, options);
    auto resolved = asn::resolve_references(module);
    REQUIRE(resolved.ok());
    transform::TranslationConfig config;
    auto file = transform::translate_schema(*resolved, config);
    REQUIRE(file.ok());
    for (const auto& mutation : support::mutation_catalogue()) {
      INFO("round " << round << ": " << mutation.name);
      auto mutated = mutation.apply(*file);
      REQUIRE(mutated.has_value());
      CHECK(detected(*resolved, *mutated, config));
    }
  }
}
