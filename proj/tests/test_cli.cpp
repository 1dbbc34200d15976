#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "asn2cafe/cli.hpp"
#include "support/fixtures.hpp"

using namespace asn2cafe;
using cli::CliInvocation;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("asn2cafe-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  static int& counter() {
    static int n = 0;
    return n;
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("translate writes the module file and its hash sidecar") {
  TempDir dir;
  CliInvocation invocation;
  invocation.command = CliInvocation::Command::Translate;
  invocation.input_path = support::fixture_path("banking.asn1");
  invocation.output_path = dir.file("bank.mod");
  invocation.hidden_sort = "Account";
  CHECK(cli::run(invocation) == 0);

  std::string text = slurp(dir.file("bank.mod"));
  CHECK(text.find("*[Account]*") != std::string::npos);
  CHECK(text.find("pr(INT + CLIENT)") != std::string::npos);
  std::string meta = slurp(dir.file("bank.mod.meta"));
  CHECK_FALSE(meta.empty());

  // Reproducible: a second run produces byte-identical output.
  CliInvocation again = invocation;
  again.output_path = dir.file("bank2.mod");
  CHECK(cli::run(again) == 0);
  CHECK(slurp(dir.file("bank2.mod")) == text);
}

TEST_CASE("missing inputs exit with a usage error") {
  CliInvocation invocation;
  invocation.command = CliInvocation::Command::Translate;
  invocation.input_path = "missing.asn1";
  CHECK(cli::run(invocation) == 2);
}

TEST_CASE("parse failures exit with diagnostics") {
  TempDir dir;
  std::ofstream(dir.file("bad.asn1")) << "Account ::= SEQUENCE {";
  CliInvocation invocation;
  invocation.command = CliInvocation::Command::Translate;
  invocation.input_path = dir.file("bad.asn1");
  CHECK(cli::run(invocation) == 1);
  CHECK_FALSE(std::filesystem::exists(dir.file("bad.mod")));
}

TEST_CASE("check passes on fresh output and flags tampering") {
  TempDir dir;
  CliInvocation translate;
  translate.command = CliInvocation::Command::Translate;
  translate.input_path = support::fixture_path("client.asn1");
  translate.output_path = dir.file("client.mod");
  REQUIRE(cli::run(translate) == 0);

  CliInvocation check = translate;
  check.command = CliInvocation::Command::Check;
  CHECK(cli::run(check) == 0);

  {
    std::ofstream out(dir.file("client.mod"), std::ios::app);
    out << "-- tampered\n";
  }
  CHECK(cli::run(check) == 1);
}

TEST_CASE("check emits json on request") {
  CliInvocation invocation;
  invocation.command = CliInvocation::Command::Check;
  invocation.input_path = support::fixture_path("client.asn1");
  invocation.output_path = "/nonexistent/ignored.mod";
  invocation.report_format = CliInvocation::ReportFormat::Json;
  CHECK(cli::run(invocation) == 0);
}

TEST_CASE("reduce evaluates against the natlist fixture") {
  CliInvocation invocation;
  invocation.command = CliInvocation::Command::Reduce;
  invocation.fixture = "natlist";
  invocation.term = "mkl(0,3)";
  CHECK(cli::run(invocation) == 0);
}

TEST_CASE("reduce evaluates against a translated schema") {
  CliInvocation invocation;
  invocation.command = CliInvocation::Command::Reduce;
  invocation.input_path = support::fixture_path("client.asn1");
  invocation.term = "returnclientid(client(9, \"a\", \"b\", \"c\", \"11111\", \"d\", \"e\"))";
  CHECK(cli::run(invocation) == 0);
}

TEST_CASE("reduce reports bad terms") {
  CliInvocation invocation;
  invocation.command = CliInvocation::Command::Reduce;
  invocation.fixture = "natlist";
  invocation.term = "mystery(1)";
  CHECK(cli::run(invocation) == 1);
}

TEST_CASE("reduce honors the step limit") {
  CliInvocation invocation;
  invocation.command = CliInvocation::Command::Reduce;
  invocation.fixture = "natlist";
  invocation.term = "mkl(0,2000)";
  invocation.step_limit = 50;
  CHECK(cli::run(invocation) == 1);
}

TEST_CASE("translate self-check accepts every fixture") {
  TempDir dir;
  for (const char* fixture : {"client.asn1", "banking.asn1", "payment.asn1", "imports.asn1"}) {
    CliInvocation invocation;
    invocation.command = CliInvocation::Command::Translate;
    invocation.input_path = support::fixture_path(fixture);
    invocation.output_path = dir.file(std::string(fixture) + ".mod");
    INFO(fixture);
    CHECK(cli::run(invocation) == 0);
  }
}
