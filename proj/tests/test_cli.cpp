#include <doctest.h>

#include <algorithm>

#include <json.hpp>

#include "qgrass/expr.hpp"
#include "qgrass/suites.hpp"

using namespace qgr;

namespace {

NCPoly mm(std::initializer_list<int> cols) {
  return maximal_minor(2, 4, make_index_set(4, cols));
}

Err kind_of(const std::string& text, int m = 2, int n = 4) {
  try {
    eval_expression(text, m, n);
  } catch (const Error& e) {
    return e.kind();
  }
  return Err::Internal;  // sentinel for "did not throw"
}

}  // namespace

TEST_CASE("expressions over maximal minors") {
  CHECK(eval_expression("[1,2]*[1,3] - q*[1,3]*[1,2]", 2, 4).is_zero());
  NCPoly lhs = eval_expression("[1,3]*[2,4] - [2,4]*[1,3]", 2, 4);
  NCPoly rhs = nc_scale(q_power(1, 2) - q_power(-1, 2), nc_mul(mm({1, 4}), mm({2, 3})));
  CHECK(nc_eq(lhs, rhs));
  CHECK(eval_expression("[1,2] * [3,4] - q*[1,3]*[2,4] + q^2 * [1,4]*[2,3]", 2, 4)
            .is_zero());
}

TEST_CASE("scalar atoms and powers") {
  CHECK(eval_expression("q^-2", 2, 4) == NCPoly::scalar(2, 4, q_power(-2, 2)));
  CHECK(eval_expression("t^2", 2, 4) == NCPoly::scalar(2, 4, p_power(1)));
  CHECK(eval_expression("p", 2, 4) == NCPoly::scalar(2, 4, p_power(1)));
  CHECK(eval_expression("(q + q^-1)^2", 2, 4) ==
        NCPoly::scalar(2, 4, q_power(2, 2) + Laurent(2) + q_power(-2, 2)));
  CHECK(eval_expression("-3", 2, 4) == NCPoly::scalar(2, 4, Laurent(-3)));
  CHECK(eval_expression("--1", 2, 4) == NCPoly::one(2, 4));
  CHECK(eval_expression("[1,2]^2", 2, 4) == nc_mul(mm({1, 2}), mm({1, 2})));
  CHECK(eval_expression("[1,2]^0", 2, 4) == NCPoly::one(2, 4));
}

TEST_CASE("parse errors carry the right kind") {
  CHECK(kind_of("[1,1]") == Err::ParseError);
  CHECK(kind_of("[2,1]") == Err::ParseError);
  CHECK(kind_of("[1,2,3]") == Err::ParseError);
  CHECK(kind_of("[1,5]") == Err::ParseError);
  CHECK(kind_of("[1]") == Err::ParseError);
  CHECK(kind_of("") == Err::ParseError);
  CHECK(kind_of("(q") == Err::ParseError);
  CHECK(kind_of("q q") == Err::ParseError);
  CHECK(kind_of("2[1,2]") == Err::ParseError);
  CHECK(kind_of("q^") == Err::ParseError);
  CHECK(kind_of("q^(2)") == Err::ParseError);
  CHECK(kind_of("x") == Err::ParseError);
  CHECK(kind_of("[1,2]^-1") == Err::NotAUnit);
  CHECK(kind_of("q", 4, 4) == Err::InvalidConfig);
  CHECK(kind_of("q", 0, 4) == Err::InvalidConfig);
}

TEST_CASE("suite registry") {
  auto names = suite_names();
  CHECK(names.size() == 13);
  CHECK(std::is_sorted(names.begin(), names.end()));
  CHECK(names.front() == "all");
}

TEST_CASE("run_suite validates its configuration") {
  SuiteConfig bad;
  bad.suite = "no-such-suite";
  CHECK_THROWS_AS(run_suite(bad), Error);

  SuiteConfig wrongSize;
  wrongSize.suite = "nonauto";
  wrongSize.m = 2;
  wrongSize.n = 5;
  CHECK_THROWS_AS(run_suite(wrongSize), Error);

  SuiteConfig degenerate;
  degenerate.m = 3;
  degenerate.n = 3;
  degenerate.suite = "relations";
  CHECK_THROWS_AS(run_suite(degenerate), Error);
}

TEST_CASE("plucker suite passes at the default size") {
  SuiteConfig cfg;
  cfg.suite = "plucker";
  Report rep = run_suite(cfg);
  CHECK(rep.all_ok());
  CHECK(!rep.checks.empty());
}

TEST_CASE("nonauto suite records the witness") {
  SuiteConfig cfg;
  cfg.suite = "nonauto";
  Report rep = run_suite(cfg);
  CHECK(rep.all_ok());
  bool sawWitness = false;
  for (const auto& c : rep.checks) sawWitness = sawWitness || !c.witness.empty();
  CHECK(sawWitness);
}

TEST_CASE("text rendering is deterministic and labelled") {
  SuiteConfig cfg;
  cfg.suite = "sigma";
  Report rep = run_suite(cfg);
  std::string a = render_text(rep, cfg);
  std::string b = render_text(rep, cfg);
  CHECK(a == b);
  CHECK(a.find("suite sigma at (2,4)") != std::string::npos);
  CHECK(a.find("PASS") != std::string::npos);
  CHECK(a.find("FAIL") == std::string::npos);
  CHECK(a.find(" ms]") == std::string::npos);  // timings stay off by default
}

TEST_CASE("json rendering matches the published shape") {
  SuiteConfig cfg;
  cfg.suite = "cocycle";
  Report rep = run_suite(cfg);
  auto j = nlohmann::json::parse(render_json(rep, cfg));
  CHECK(j["version"] == "1");
  CHECK(j["params"]["m"] == 2);
  CHECK(j["params"]["n"] == 4);
  REQUIRE(j["checks"].is_array());
  REQUIRE(!j["checks"].empty());
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c["status"] == "pass");
    CHECK(c["elapsed_ms"] == 0);
  }
}

TEST_CASE("the all suite aggregates with prefixed check names") {
  SuiteConfig cfg;
  cfg.suite = "all";
  Report rep = run_suite(cfg);
  CHECK(rep.all_ok());
  bool sawPrefix = false;
  for (const auto& c : rep.checks)
    sawPrefix = sawPrefix || c.name.rfind("relations: ", 0) == 0;
  CHECK(sawPrefix);
  // nonauto participates at (2,4)
  bool sawNonauto = false;
  for (const auto& c : rep.checks)
    sawNonauto = sawNonauto || c.name.rfind("nonauto: ", 0) == 0;
  CHECK(sawNonauto);
}

TEST_CASE("the all suite skips nonauto away from (2,4)") {
  SuiteConfig cfg;
  cfg.suite = "all";
  cfg.m = 1;
  cfg.n = 3;
  Report rep = run_suite(cfg);
  CHECK(rep.all_ok());
  for (const auto& c : rep.checks) CHECK(c.name.rfind("nonauto: ", 0) != 0);
}
