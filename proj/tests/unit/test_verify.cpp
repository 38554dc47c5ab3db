#include "doctest.h"
#include "mnring/errors.hpp"
#include "mnring/verify.hpp"

using namespace mnr;
using namespace mnr::verify;

TEST_CASE("every check passes at level 1") {
  SuiteConfig config;
  config.level = 1;
  config.trials = 10;
  for (const CheckReport& r : run_all(config)) {
    INFO(r.id << ": " << r.witness.value_or(""));
    CHECK(r.passed());
    CHECK(r.samples > 0);
    CHECK_FALSE(r.witness.has_value());
  }
}

TEST_CASE("reports come back in registry order and are deterministic") {
  SuiteConfig config;
  config.seed = 42;
  config.level = 2;
  config.trials = 5;
  const auto parallel = run_all(config);
  config.parallel = false;
  const auto serial = run_all(config);
  CHECK(parallel == serial);
  REQUIRE(parallel.size() == registry().size());
  for (std::size_t i = 0; i < parallel.size(); ++i) CHECK(parallel[i].id == registry()[i].id);
}

TEST_CASE("filtering and bad configurations") {
  SuiteConfig config;
  config.only = {"center", "witnesses"};
  config.trials = 3;
  const auto reports = run_all(config);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].id == "center");
  CHECK(reports[1].id == "witnesses");

  config.only = {"no-such-check"};
  CHECK_THROWS_AS(run_all(config), DomainError);
  config.only.clear();
  config.level = 0;
  CHECK_THROWS_AS(run_all(config), DomainError);
}

TEST_CASE("report JSON round trip") {
  std::vector<CheckReport> reports = {
      {"a", "first statement", 3, Status::pass, std::nullopt},
      {"b", "second", 7, Status::fail, std::string("x1*r1 != r1*x1")},
  };
  CHECK(reports_from_json(to_json(reports)) == reports);
  CHECK(to_json(reports, 2) == to_json(reports_from_json(to_json(reports, -1)), 2));
}
