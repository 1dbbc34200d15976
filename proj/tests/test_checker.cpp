#include <catch2/catch_amalgamated.hpp>

#include "asn2cafe/check/correspondence.hpp"
#include "asn2cafe/check/wellformed.hpp"
#include "asn2cafe/transform/translate.hpp"
#include "support/fixtures.hpp"

using namespace asn2cafe;

namespace {

struct Setup {
  asn::ResolvedSchema schema;
  transform::TranslationConfig config;
  cafe::CafeFile file;
};

Setup banking(std::optional<std::string> hidden = std::nullopt) {
  Setup s{support::load_schema("banking.asn1"), {}, {}};
  s.config.hidden_sort = hidden;
  auto file = transform::translate_schema(s.schema, s.config);
  REQUIRE(file.ok());
  s.file = *file;
  return s;
}

}  // namespace

TEST_CASE("generator output validates against its schema") {
  for (auto hidden : std::vector<std::optional<std::string>>{std::nullopt, "Account"}) {
    auto s = banking(hidden);
    auto report = check::check_correspondence(s.schema, s.file, s.config);
    INFO(report.to_text());
    CHECK(report.pass());
    CHECK(check::check_wellformed(s.file).empty());
  }
}

TEST_CASE("a deleted observer fails with the expected count") {
  auto s = banking();
  cafe::CafeModule* client = nullptr;
  for (auto& m : s.file.modules)
    if (m.name == "CLIENT") client = &m;
  REQUIRE(client != nullptr);
  for (std::size_t i = 0; i < client->ops.size(); ++i) {
    if (client->ops[i].name == "returnfirstname") {
      client->ops.erase(client->ops.begin() + static_cast<long>(i));
      break;
    }
  }
  auto report = check::check_correspondence(s.schema, s.file, s.config);
  REQUIRE_FALSE(report.pass());
  bool message_found = false;
  for (const auto& entry : report.entries)
    for (const auto& problem : entry.problems)
      message_found |= problem.find("Client: 6 observers, expected 7") != std::string::npos;
  CHECK(message_found);
}

TEST_CASE("colliding operator names are reported as duplicates") {
  auto s = banking("Account");
  cafe::CafeModule* account = nullptr;
  for (auto& m : s.file.modules)
    if (m.name == "ACCOUNT") account = &m;
  REQUIRE(account != nullptr);
  for (auto& op : account->ops)
    if (op.name == "returnclientid3") op.name = "returnclientid";
  auto report = check::check_correspondence(s.schema, s.file, s.config);
  REQUIRE_FALSE(report.pass());
  bool duplicate = false;
  for (const auto& d : report.diagnostics)
    duplicate |= d.message.find("duplicate operator name returnclientid") != std::string::npos;
  CHECK(duplicate);
}

TEST_CASE("module order violations are flagged") {
  auto s = banking();
  REQUIRE(s.file.modules.size() > 2);
  // Move the last module (which imports earlier ones) to the front.
  cafe::CafeModule moved = s.file.modules.back();
  s.file.modules.pop_back();
  s.file.modules.insert(s.file.modules.begin(), moved);
  auto diags = check::check_wellformed(s.file);
  REQUIRE_FALSE(diags.empty());
  bool order = false;
  for (const auto& d : diags)
    order |= d.message.find("used before definition") != std::string::npos;
  CHECK(order);
}

TEST_CASE("equations over undeclared sorts are flagged with their module") {
  auto s = banking();
  for (auto& m : s.file.modules) {
    if (m.name != "CLIENT") continue;
    m.ops[0].arg_sorts[0] = "Ghost";
  }
  auto diags = check::check_wellformed(s.file);
  REQUIRE_FALSE(diags.empty());
  bool found = false;
  for (const auto& d : diags)
    found |= d.message.find("Ghost") != std::string::npos &&
             d.message.find("CLIENT") != std::string::npos;
  CHECK(found);
}

TEST_CASE("reports are idempotent") {
  auto s = banking("Account");
  auto first = check::check_correspondence(s.schema, s.file, s.config);
  auto second = check::check_correspondence(s.schema, s.file, s.config);
  CHECK(first.to_text() == second.to_text());
  CHECK(first.to_json() == second.to_json());
}

TEST_CASE("json report carries the stable keys") {
  auto s = banking();
  auto report = check::check_correspondence(s.schema, s.file, s.config);
  auto json = report.to_json();
  REQUIRE(json.contains("verdict"));
  REQUIRE(json.contains("entries"));
  REQUIRE(json.contains("diagnostics"));
  CHECK(json["verdict"] == "pass");
  REQUIRE_FALSE(json["entries"].empty());
  for (const char* key : {"type", "module", "expected", "found", "verdict"}) {
    INFO(key);
    CHECK(json["entries"][0].contains(key));
  }
}

TEST_CASE("report entries cover every assignment including synthetics") {
  auto schema = support::load_schema("payment.asn1");
  transform::TranslationConfig config;
  auto file = transform::translate_schema(schema, config);
  REQUIRE(file.ok());
  auto report = check::check_correspondence(schema, *file, config);
  CHECK(report.pass());
  CHECK(report.entries.size() == schema.module.assignments.size());
}
