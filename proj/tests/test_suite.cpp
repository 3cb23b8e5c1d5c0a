#include "ncworlds/suite.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace ncw::suite;

TEST_CASE("every suite passes with the default seed") {
  for (const auto& name : suite_names()) {
    Report r = run_suite(name);
    CHECK_MESSAGE(r.passed(), name);
    CHECK_FALSE(r.checks.empty());
  }
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_suite("curvature"), std::invalid_argument); }

TEST_CASE("json output is deterministic and excludes timing by default") {
  Options o;
  o.seed = 99;
  o.trials = 20;
  std::string a = emit_json(run_suite("all", o));
  std::string b = emit_json(run_suite("all", o));
  CHECK(a == b);
  auto j = nlohmann::json::parse(a);
  CHECK(j["status"] == "pass");
  CHECK(j["seed"] == 99);
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("identity"));
    CHECK(c["residual"] == "0");
    CHECK_FALSE(c.contains("elapsed_ms"));
  }
  auto timed = nlohmann::json::parse(emit_json(run_suite("bianchi", o), true));
  CHECK(timed["checks"][0].contains("elapsed_ms"));
}

TEST_CASE("em suite check ids") {
  Report r = run_suite("em");
  std::vector<std::string> ids;
  for (const auto& c : r.checks) ids.push_back(c.id);
  for (const char* id : {"lorentz-force", "no-monopoles", "faraday", "ampere"})
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
}

TEST_CASE("text report marks each check") {
  std::string text = emit_text(run_suite("constraints-3"));
  CHECK(text.find("✓ third-constraint-ratio") != std::string::npos);
  CHECK(text.find("c = 1/12") != std::string::npos);
}
