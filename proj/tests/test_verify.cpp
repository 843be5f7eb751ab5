#include <doctest.h>

#include <json.hpp>

#include "adjc/errors.hpp"
#include "adjc/verify.hpp"

using namespace adjc;

TEST_CASE("suite expansion") {
  CHECK(expand_suites({}) == suite_names());
  CHECK(expand_suites({"all"}) == suite_names());
  CHECK(expand_suites({"bb", "roots", "bb"}) == std::vector<std::string>{"roots", "bb"});
  CHECK_THROWS_AS(expand_suites({"hodge"}), InvalidInput);
  CHECK(suite_names().size() == 9);
  CHECK(default_groups().size() == 16);
}

TEST_CASE("group names") {
  CHECK(parse_group("E7", 8) == DynkinType{'E', 7});
  CHECK(parse_group("A3", 8) == DynkinType{'A', 3});
  CHECK_THROWS_AS(parse_group("B2", 8), InvalidInput);
  CHECK_THROWS_AS(parse_group("E9", 8), InvalidInput);
  CHECK_THROWS_AS(parse_group("Q7", 8), InvalidInput);
  CHECK_THROWS_AS(parse_group("B9", 8), InvalidInput);
  CHECK(parse_group("B9", 9) == DynkinType{'B', 9});
  try {
    parse_group("D12", 8);
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("--rank") != std::string::npos);
  }
}

TEST_CASE("types A and C skip the contact suites") {
  RunOptions o;
  o.groups = {"A3", "C3"};
  auto rep = run_verification(o);
  CHECK(rep.passed());
  int skips = 0;
  for (const auto& r : rep.results) {
    if (r.status == CheckStatus::Skip) ++skips;
    CHECK(r.status != CheckStatus::Fail);
  }
  CHECK(skips >= 10);
}

TEST_CASE("json report") {
  RunOptions o;
  o.groups = {"G2", "B3"};
  o.suites = {"roots", "polytope"};
  auto a = render_json(run_verification(o));
  CHECK(a == render_json(run_verification(o)));
  auto doc = nlohmann::json::parse(a);
  CHECK(doc["meta"]["tool"] == "adjc");
  CHECK(doc["meta"]["seed"] == 1);
  CHECK(doc["meta"]["failures"] == 0);
  CHECK(doc["meta"]["groups"] == nlohmann::json::array({"G2", "B3"}));
  const auto& res = doc["results"];
  REQUIRE(res.size() > 4);
  for (std::size_t i = 0; i < res.size(); ++i) {
    for (const char* key : {"check_id", "group", "expected", "actual", "status", "paper_anchor"}) CHECK(res[i].contains(key));
    if (i) {
      auto prev = std::make_pair(res[i - 1]["check_id"].get<std::string>(), res[i - 1]["group"].get<std::string>());
      auto cur = std::make_pair(res[i]["check_id"].get<std::string>(), res[i]["group"].get<std::string>());
      CHECK(prev < cur);
    }
  }
  auto md = render_markdown(run_verification(o));
  CHECK(md.find("| check_id |") != std::string::npos);
}

TEST_CASE("seed changes only randomized checks") {
  RunOptions o;
  o.groups = {"F4"};
  o.suites = {"bb"};
  auto a = run_verification(o);
  o.seed = 77;
  auto b = run_verification(o);
  CHECK(a.passed());
  CHECK(b.passed());
  CHECK(a.results.size() == b.results.size());
}

TEST_CASE("G2 fails only on the Y_m cell") {
  RunOptions o;
  o.groups = {"G2"};
  auto rep = run_verification(o);
  REQUIRE(rep.failures() == 1);
  for (const auto& r : rep.results)
    if (r.status == CheckStatus::Fail) CHECK(r.check_id == "freudenthal.Y_m");
}
