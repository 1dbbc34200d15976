#include <catch2/catch_amalgamated.hpp>

#include "asn2cafe/transform/name_pool.hpp"

using namespace asn2cafe::transform;

TEST_CASE("role-based name mangling") {
  CHECK(mangle("Client", NameRole::Module) == "CLIENT");
  CHECK(mangle("Client", NameRole::Sort) == "Client");
  CHECK(mangle("Client", NameRole::Constructor) == "client");
  CHECK(mangle("Client", NameRole::Variable) == "aclient");
  CHECK(mangle("clientid", NameRole::Observer) == "returnclientid");
  CHECK(mangle("Payment-method", NameRole::Module) == "PAYMENT-METHOD");
  CHECK(mangle("Payment-method", NameRole::Constructor) == "payment-method");
  CHECK(mangle("ClientID", NameRole::Variable) == "aclientid");
}

TEST_CASE("the pool suffixes repeated observer bases file-wide") {
  NamePool pool;
  CHECK(pool.issue_op(mangle("clientid", NameRole::Observer)) == "returnclientid");
  CHECK(pool.issue_op(mangle("clientid", NameRole::Observer)) == "returnclientid2");
  CHECK(pool.issue_op(mangle("clientid", NameRole::Observer)) == "returnclientid3");
  CHECK(pool.issue_op(mangle("date", NameRole::Observer)) == "returndate");
  CHECK(pool.issue_op(mangle("date", NameRole::Observer)) == "returndate2");
}

TEST_CASE("variable names are deduplicated per module") {
  NamePool pool;
  std::set<std::string> used;
  CHECK(pool.issue_var(used, "ans") == "ans");
  CHECK(pool.issue_var(used, "ans") == "ans2");
  CHECK(pool.issue_var(used, "ans") == "ans3");
  CHECK(pool.issue_var(used, "aint") == "aint");
}
