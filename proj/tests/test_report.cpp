#include "wronsk/report.hpp"

#include <doctest.h>

using namespace wronsk;

TEST_SUITE("report") {

TEST_CASE("json encodings") {
  CHECK(to_json(Rational(-3, 10)) == "-3/10");
  QSeries f(3);
  f[1] = Rational(1, 2);
  CHECK(to_json(f).dump() == R"({"coeffs":["0/1","1/2","0/1"],"precision":3})");
  SymbolVector w(5);
  w.add(Monomial::XY, 1, 2, Rational(2, 3));
  CHECK(to_json(w).dump() == R"([["xy",1,2,"2/3"]])");
  VectorQ v(2);
  v << 1, 2;
  const SubspaceQ s = span<Rational>({v}, 2);
  CHECK(to_json(s).dump() == R"({"ambient_dim":2,"basis":[[0,0,"1/1"],[0,1,"2/1"]],"dim":1})");
}

TEST_CASE("config validation") {
  RunConfig bad;
  bad.levels = {1};
  CHECK_THROWS_AS(validate(bad), ConfigError);
  RunConfig low;
  low.levels = {5};
  low.precision = 4;
  CHECK_THROWS_AS(validate(low), ConfigError);
  RunConfig unknown;
  unknown.levels = {5};
  unknown.suites = {"nonsense"};
  CHECK_THROWS_AS(validate(unknown), ConfigError);
  CHECK_THROWS_AS(parse_format("xml"), ConfigError);
}

TEST_CASE("verification run at level 5 passes and is deterministic") {
  RunConfig cfg;
  cfg.levels = {5};
  cfg.suites = {"all"};
  const RunResult a = run_suite(cfg);
  const RunResult b = run_suite(cfg);
  CHECK(a.exit_code == 0);
  CHECK(a.report.at("schema") == 1);
  CHECK(a.report.at("pass") == true);
  CHECK(a.report.dump() == b.report.dump());
  const Json& suites = a.report.at("levels").at(0).at("suites");
  for (const auto& name : suite_names()) CHECK(suites.at(name).at("pass") == true);
}

TEST_CASE("suites run in dependency order regardless of request order") {
  RunConfig cfg;
  cfg.levels = {5};
  cfg.suites = {"theorem", "dims"};
  std::vector<std::string> seen;
  run_suite(cfg, [&](const std::string& m) { seen.push_back(m); });
  REQUIRE(seen.size() == 3);
  CHECK(seen[1].find("dims") != std::string::npos);
  CHECK(seen[2].find("theorem") != std::string::npos);
}

TEST_CASE("modsym dims json") {
  const ModularSymbols ms(7);
  const Json j = dims_json(ms);
  CHECK(j.at("dimS4plus") == 3);
  CHECK(j.at("cusps") == 6);
}

}
