#include <diracidx/report.hpp>

#include <catch2/catch.hpp>

#include <random>

using namespace diracidx;

namespace {

ValidationReport random_report(const std::string& suite, std::mt19937_64& rng) {
  ValidationReport rep(suite);
  std::uniform_int_distribution<int> count(1, 6);
  std::uniform_real_distribution<double> res(0.0, 1e-6);
  std::bernoulli_distribution coin(0.8);
  rep.config()["tol"] = 1e-9;
  rep.config()["seed"] = 7;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Json payload;
    if (coin(rng)) payload["value"] = res(rng);
    rep.add(suite + "/check" + std::to_string(i), "randomized record", coin(rng),
            res(rng), payload);
  }
  return rep;
}

}  // namespace

TEST_CASE("merge of nothing is an empty passing report") {
  ValidationReport rep = ValidationReport::merge({});
  REQUIRE(rep.passed());
  REQUIRE(rep.checks().empty());
}

TEST_CASE("one failing record fails the merged report") {
  ValidationReport a("a");
  a.add("a/ok", "fine", true, 0.0);
  ValidationReport b("b");
  b.add("b/bad", "broken", false, 1.0);
  ValidationReport merged = ValidationReport::merge({a, b});
  REQUIRE_FALSE(merged.passed());
  REQUIRE(merged.checks().size() == 2);
  REQUIRE(merged.checks()[0].id == "a/ok");
  REQUIRE(merged.checks()[1].id == "b/bad");
}

TEST_CASE("merge is associative") {
  std::mt19937_64 rng(5);
  ValidationReport a = random_report("a", rng);
  ValidationReport b = random_report("b", rng);
  ValidationReport c = random_report("c", rng);
  ValidationReport left = ValidationReport::merge(
      {ValidationReport::merge({a, b}), c});
  ValidationReport right = ValidationReport::merge(
      {a, ValidationReport::merge({b, c})});
  ValidationReport flat = ValidationReport::merge({a, b, c});
  REQUIRE(left == flat);
  REQUIRE(right == flat);
}

TEST_CASE("duplicate ids are rejected") {
  ValidationReport a("a");
  a.add("same", "first", true);
  REQUIRE_THROWS_AS(a.add("same", "again", true), std::invalid_argument);

  ValidationReport b("b");
  b.add("same", "other suite, same id", true);
  REQUIRE_THROWS_AS(ValidationReport::merge({a, b}), std::invalid_argument);

  ValidationReport c("a");
  c.add("c/1", "ok", true);
  REQUIRE_THROWS_AS(ValidationReport::merge({a, c}), std::invalid_argument);
}

TEST_CASE("serialization round-trips random reports") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    ValidationReport rep = random_report("suite" + std::to_string(trial), rng);
    if (trial % 3 == 0) rep.elapsed_ms = 12.5;
    if (trial % 4 == 0) rep.timestamp = "2000-01-01T00:00:00Z";
    ValidationReport back = ValidationReport::from_json(rep.to_json());
    REQUIRE(back == rep);
    // and the merged form round-trips too
    ValidationReport merged = ValidationReport::merge({rep}, "all");
    REQUIRE(ValidationReport::from_json(merged.to_json()) == merged);
  }
}

TEST_CASE("status strings and error records") {
  ValidationReport rep("s");
  rep.add("s/pass", "ok", true, 0.0);
  rep.add_error("s/err", "exploded", "what text");
  REQUIRE_FALSE(rep.passed());
  REQUIRE(rep.count(CheckStatus::error) == 1);
  Json j = rep.to_json();
  REQUIRE(j["status"] == "fail");
  REQUIRE(j["checks"][1]["status"] == "error");
  REQUIRE(j["checks"][1]["payload"]["error"] == "what text");
  REQUIRE(check_status_from_string("pass") == CheckStatus::pass);
  REQUIRE_THROWS_AS(check_status_from_string("meh"), std::invalid_argument);
}

TEST_CASE("text rendering mentions ids and the summary") {
  ValidationReport rep("render");
  rep.add("render/a", "first", true, 1e-12);
  rep.add("render/b", "second", false);
  std::string text = rep.render_text();
  REQUIRE(text.find("render/a") != std::string::npos);
  REQUIRE(text.find("FAIL") != std::string::npos);
  REQUIRE(text.find("pass: 1") != std::string::npos);
}
