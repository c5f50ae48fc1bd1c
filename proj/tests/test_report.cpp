#include <fstream>

#include "doctest.h"

#include "irr/errors.hpp"
#include "irr/parser.hpp"
#include "irr/report.hpp"

using namespace irr;

namespace {

Report run(const char* f, const char* g, AnalyzeOptions options = {}) {
  return analyze(parse_poly(f), parse_poly(g), options);
}

nlohmann::json stable_json(const Report& r) {
  auto j = to_json(r);
  j.erase("timing");
  return j;
}

}  // namespace

TEST_CASE("analyze: one finite place") {
  auto r = run("x", "y + x*y^2");
  CHECK_FALSE(r.dependent);
  REQUIRE(r.finite_places.size() == 1);
  CHECK(r.finite_places[0].place == Place::at(0));
  CHECK(r.finite_places[0].ir == 1);
  CHECK(r.infinity.ir == 0);
  auto j = to_json(r);
  CHECK(j["finite_places"][0]["place"] == "0");
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["input"]["f"] == "x");
}

TEST_CASE("analyze: dependent pair") {
  auto r = run("x^2+y^3", "x^2+y^3");
  CHECK(r.dependent);
  REQUIRE(r.chi_f.has_value());
  CHECK(*r.chi_f == -1);
  CHECK(r.infinity.ir == 1);
  CHECK(r.finite_places.empty());
  CHECK(to_json(r)["chiF"] == -1);
}

TEST_CASE("analyze: trivial pair and constant g give zero profiles") {
  auto r = run("x", "y");
  CHECK(r.finite_places.empty());
  CHECK(r.infinity.ir == 0);
  auto c = run("x^3 + x*y - 2", "0");
  CHECK(c.g_constant);
  CHECK(c.finite_places.empty());
  CHECK(c.infinity.ir == 0);
}

TEST_CASE("analyze: constant f is rejected") {
  CHECK_THROWS_AS(run("7/2", "x*y"), DegenerateInput);
}

TEST_CASE("analyze: requested places") {
  AnalyzeOptions o;
  o.at = {Place::at(Rational(1, 2)), Place::at(0), Place::infinity()};
  auto r = run("x", "y + x*y^2", o);
  REQUIRE(r.at.size() == 3);
  CHECK(r.at[0].ir == 0);
  CHECK(r.at[1].ir == 1);
  CHECK(r.at[2].ir == 0);
  CHECK(r.ir_at(Place::at(-1)) == 0);
}

TEST_CASE("analyze: oracle block agrees on the basic examples") {
  AnalyzeOptions o;
  o.oracle = true;
  for (auto [f, g] : {std::pair{"x", "y + x*y^2"}, std::pair{"x", "y+x*(x-1)*y^2"}, std::pair{"x^2", "x^3"}}) {
    auto r = run(f, g, o);
    REQUIRE(r.oracle.has_value());
    CHECK(r.oracle_agrees());
    auto j = to_json(r);
    REQUIRE(j.contains("oracle_heuristics"));
    CHECK(j["oracle_heuristics"]["heuristic"] == true);
  }
}

TEST_CASE("analyze is deterministic for a fixed seed") {
  AnalyzeOptions o;
  o.seed = 17;
  o.oracle = true;
  auto a = stable_json(run("x^2*y + x", "x*y^2 + y", o));
  auto b = stable_json(run("x^2*y + x", "x*y^2 + y", o));
  CHECK(a.dump() == b.dump());
}

TEST_CASE("resolution dump lists charts and components") {
  AnalyzeOptions o;
  o.keep_resolution = true;
  auto r = run("x^2+x*y", "x*y+y^2", o);
  REQUIRE(r.resolution.has_value());
  auto j = resolution_to_json(*r.resolution);
  CHECK(j["charts"].size() >= 2);
  CHECK(j["components"].size() >= 1);
  CHECK(to_json(r).contains("resolution"));
}

TEST_CASE("fragment matching reports a diff") {
  nlohmann::json actual = {{"a", 1}, {"b", {{"c", 2}, {"d", 3}}}, {"e", {1, 2}}};
  std::vector<std::string> diff;
  CHECK(json_fragment_matches({{"b", {{"c", 2}}}}, actual, "", diff));
  CHECK(diff.empty());
  CHECK_FALSE(json_fragment_matches({{"b", {{"c", 5}}}}, actual, "", diff));
  REQUIRE(diff.size() == 1);
  CHECK(diff[0].find("/b/c") != std::string::npos);
  diff.clear();
  CHECK_FALSE(json_fragment_matches({{"e", {1}}}, actual, "", diff));
  CHECK_FALSE(json_fragment_matches({{"zz", 1}}, actual, "", diff));
}

TEST_CASE("corpus runner: pass, perturbed, empty and malformed") {
  std::string good =
      R"({"name":"one place","f":"x","g":"y+x*y^2","expected":{"finite_places":[{"place":"0","ir":1}],"infinity":{"ir":0}}})";
  std::string bad =
      R"({"name":"perturbed","f":"x","g":"y+x*y^2","expected":{"finite_places":[{"place":"0","ir":2}]}})";
  auto ok = run_corpus_lines({good, "", "# comment"});
  CHECK(ok.entries == 1);
  CHECK(ok.ok());

  auto fail = run_corpus_lines({good, bad});
  CHECK(fail.entries == 2);
  CHECK_FALSE(fail.ok());
  REQUIRE(fail.failures.size() == 1);
  CHECK(fail.failures[0].find("perturbed") != std::string::npos);
  CHECK(fail.failures[0].find("expected 2, got 1") != std::string::npos);

  auto empty = run_corpus_lines({});
  CHECK(empty.ok());
  CHECK(empty.warnings.size() == 1);

  CHECK_THROWS_AS(run_corpus_lines({"{not json"}), ParseError);
  CHECK_THROWS_AS(run_corpus_lines({R"({"f":"x"})"}), ParseError);
}

TEST_CASE("printed corpus polynomials parse back to themselves") {
  std::ifstream in(IRR_CORPUS_PATH);
  REQUIRE(in.good());
  int count = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line);
    for (const char* key : {"f", "g"}) {
      MPoly p = parse_poly(j[key].get<std::string>());
      CHECK(parse_poly(p.to_string()) == p);
      ++count;
    }
  }
  CHECK(count > 0);
}
