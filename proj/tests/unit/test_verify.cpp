#include <doctest.h>

#include "hq/verify.hpp"

using namespace hq;

TEST_CASE("criterion table") {
  const auto& c = criteria();
  REQUIRE(c.size() == 12);
  for (std::size_t k = 0; k < c.size(); ++k) {
    CHECK(c[k].number == static_cast<int>(k) + 1);
    CHECK(c[k].limit_seconds > 0);
  }
  CHECK(c[0].key == "group");
  CHECK(c[9].key == "config");
}

TEST_CASE("selected criteria run and pass") {
  VerifyConfig cfg;
  cfg.only = {"group", "3", "config"};
  const RunReport r = verify_all(cfg);
  REQUIRE(r.criteria.size() == 3);
  CHECK(r.criteria[0].number == 1);
  CHECK(r.criteria[1].number == 3);
  CHECK(r.criteria[2].number == 10);
  for (const auto& c : r.criteria) {
    CHECK_FALSE(c.checks.empty());
    CHECK(c.pass());
  }
  CHECK(r.pass());
  CHECK(summary_line(r.criteria[0]).rfind("[PASS]", 0) == 0);
}

TEST_CASE("unknown keys are rejected") {
  VerifyConfig cfg;
  cfg.only = {"nonsense"};
  CHECK_THROWS_AS(verify_all(cfg), std::invalid_argument);
  cfg.only = {"13"};
  CHECK_THROWS_AS(verify_all(cfg), std::invalid_argument);
}

TEST_CASE("reports without timings are deterministic") {
  VerifyConfig cfg;
  cfg.only = {"params", "igusa"};
  const std::string a = verify_all(cfg).to_json().dump();
  const std::string b = verify_all(cfg).to_json().dump();
  CHECK(a == b);
  CHECK(a.find("\"seconds\"") == std::string::npos);
  CHECK(verify_all(cfg).to_json(true).dump().find("\"seconds\"") != std::string::npos);
}

TEST_CASE("a failed check fails the criterion") {
  CriterionResult r;
  r.number = 1;
  r.key = "group";
  r.title = "t";
  r.limit_seconds = 1;
  r.checks.push_back({"x", "1", "2", false});
  CHECK_FALSE(r.pass());
  CHECK(summary_line(r).rfind("[FAIL]", 0) == 0);
  r.checks.back().pass = true;
  r.seconds = 5;
  CHECK_FALSE(r.pass());
}
