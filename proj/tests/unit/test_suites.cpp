#include <algorithm>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "orbi/suites.hpp"

using namespace orbi;

namespace {

SuiteParams params(int n, int m, int mp = 2) {
  SuiteParams p;
  p.n = n;
  p.m = m;
  p.mp = mp;
  return p;
}

}  // namespace

TEST_CASE("suite names") {
  const auto names = suite_names();
  for (const char* s : {"lemma31", "table1", "table2", "table3", "table4", "table5", "table6", "thm33_steps",
                        "thm37_steps", "center", "orders", "inverses", "quotients"}) {
    CHECK(std::find(names.begin(), names.end(), s) != names.end());
  }
  CHECK_THROWS_AS(run_suite("no-such-suite", {}), Error);
}

TEST_CASE("fast suites pass") {
  for (const auto& [name, n, m] : std::vector<std::tuple<std::string, int, int>>{
           {"center", 2, 2}, {"table6", 3, 2}, {"inverses", 3, 2}, {"orders", 0, 2}, {"thm37_steps", 3, 3}}) {
    const auto rep = run_suite(name, params(n, m));
    INFO(rep.to_text());
    CHECK(rep.pass);
    CHECK(rep.exit_code() == 0);
    CHECK_FALSE(rep.entries.empty());
    for (const auto& e : rep.entries) CHECK(e.passed());
  }
}

TEST_CASE("report JSON layout") {
  const auto rep = run_suite("table6", params(3, 2));
  const auto j = nlohmann::ordered_json::parse(rep.to_json());
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"suite", "params", "convention", "entries", "pass"});
  CHECK(j["suite"] == "table6");
  CHECK(j["params"]["n"] == 3);
  CHECK(j["params"]["m"] == 2);
  CHECK(j["params"]["version"] == kToolVersion);
  CHECK(j["pass"] == true);
  REQUIRE(j["entries"].size() == rep.entries.size());
  for (const auto& e : j["entries"]) {
    CHECK(e.contains("tag"));
    CHECK(e.contains("status"));
    CHECK(e.contains("nodes"));
    CHECK(e.contains("chain_len"));
  }
}

TEST_CASE("exit codes follow the worst status") {
  VerificationReport r;
  r.add({"a", "proved", 1, 1, ""});
  CHECK(r.pass);
  CHECK(r.exit_code() == 0);
  r.add({"b", "unknown", 10, 0, ""});
  CHECK_FALSE(r.pass);
  CHECK(r.exit_code() == 2);
  r.add({"c", "overflow", 10, 0, ""});
  CHECK(r.exit_code() == 3);
  r.add({"d", "mismatch", 0, 0, ""});
  CHECK(r.exit_code() == 1);
  CHECK(r.to_text().find("mismatch") != std::string::npos);
}

TEST_CASE("goal runner records lemmas") {
  VerificationReport rep;
  GoalRunner runner(build_orbifold_braid(3, 0, {3}), ProverBudget{}, rep);
  const Word c = expand_pure_generator(GeneratorId::c(3, 1));
  const Word h1 = Word::of(GeneratorId::h(1));
  CHECK(runner.prove("h1 c31", h1 * c, c * h1, {}, "comm"));
  CHECK(runner.has_lemma("comm"));
  CHECK(runner.prove("h1^2 c31", h1 * h1 * c, c * h1 * h1, {"comm"}));
  CHECK(rep.entries.size() == 2);
  CHECK(rep.pass);

  ProverBudget small;
  small.max_nodes = 100;
  GoalRunner weak(build_orbifold_braid(3, 0, {3}), small, rep);
  // different in the wreath quotient, so the unknown outcome becomes a mismatch
  CHECK_FALSE(weak.prove("h2 c31", Word::of(GeneratorId::h(2)) * c, c * Word::of(GeneratorId::h(2))));
  CHECK(rep.entries.back().status == "mismatch");
  CHECK(rep.exit_code() == 1);
}

TEST_CASE("unsupported parameters are rejected") {
  CHECK_THROWS_AS(run_suite("lemma31", params(4, 2)), Error);
}
