#include "run_config.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace kingman;
using namespace kingman::cli;

namespace {

struct Ran {
  int status;
  std::string out;
  std::string err;
};

Ran run_capture(const RunConfig& c) {
  std::ostringstream out, err;
  const int status = run(c, out, err);
  return {status, out.str(), err.str()};
}

RunConfig make(const std::string& command) {
  RunConfig c;
  c.command = command;
  return c;
}

}  // namespace

TEST_CASE("config round-trips through JSON") {
  RunConfig c = make("moments");
  c.alpha = "1/2";
  c.theta = "1";
  c.lambdas = {"[2]", "[2,2]"};
  c.samples = 500;
  c.tail = 1e-3;
  c.seed = 99;
  c.jobs = 3;
  c.output = "m.json";
  CHECK(config_from_json(to_json(c)) == c);
  CHECK(config_from_json(Json::parse(to_json(c).dump())) == c);

  RunConfig w = make("wf");
  w.N = 3;
  w.eta = "2";
  w.dt = 1e-4;
  w.steps = 10;
  w.point = "0.5,0.3,0.2";
  w.format = "csv";
  CHECK(config_from_json(to_json(w)) == w);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"n": 3})")), ConfigError);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"command": "measure", "n": "x"})")), ConfigError);
}

TEST_CASE("invalid configurations are rejected before computing") {
  RunConfig c = make("measure");
  CHECK_THROWS_AS(validate(c), ConfigError);  // no --n
  c.n = 3;
  c.alpha = "2";
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.alpha = "1/2";
  c.theta = "-1";
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.theta = "abc";
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.theta = "1";
  CHECK_NOTHROW(validate(c));
  c.beta = "1";
  CHECK_THROWS_AS(validate(c), ConfigError);  // both series named
  c.format = "csv";
  c.beta.reset();
  CHECK_THROWS_AS(validate(c), ConfigError);

  CHECK_THROWS_AS(validate(make("frobnicate")), ConfigError);
  RunConfig g = make("generator");
  g.m = 5;
  g.N = 3;
  g.beta = "1";
  CHECK_THROWS_AS(validate(g), ConfigError);  // degenerate needs m <= N
  RunConfig mo = make("moments");
  mo.lambdas = {"[2,1]"};
  CHECK_THROWS_AS(validate(mo), ConfigError);
  RunConfig s = make("sample");
  s.kind = "updown";
  s.n = 4;
  s.steps = 3;
  s.start = "[3]";
  CHECK_THROWS_AS(validate(s), ConfigError);
  RunConfig w = make("wf");
  w.N = 3;
  w.steps = 5;
  CHECK_THROWS_AS(validate(w), ConfigError);  // neither eta nor beta
  w.eta = "0";
  CHECK_THROWS_AS(validate(w), ConfigError);
  w.eta = "2";
  CHECK_NOTHROW(validate(w));
  RunConfig v = make("verify");
  v.max_n = 3;
  v.checks = {"nonsense"};
  CHECK_THROWS_AS(validate(v), ConfigError);
}

TEST_CASE("exact outputs") {
  RunConfig e = make("enumerate");
  e.n = 0;
  CHECK(run_capture(e).out == "[\"[]\"]\n");
  e.n = 4;
  e.max_length = 2;
  CHECK(run_capture(e).out == "[\"[4]\",\"[3,1]\",\"[2,2]\"]\n");

  RunConfig m = make("measure");
  m.n = 2;
  m.alpha = "1/2";
  m.theta = "1";
  auto r = run_capture(m);
  CHECK(r.status == 0);
  CHECK(r.out == "{\"[2]\":\"1/4\",\"[1,1]\":\"3/4\"}\n");
}

TEST_CASE("verify reports zero residuals") {
  RunConfig v = make("verify");
  v.alpha = "1/2";
  v.theta = "1";
  v.max_n = 5;
  auto r = run_capture(v);
  CHECK(r.status == 0);
  auto j = Json::parse(r.out);
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["pass"] == true);
  long residuals = 0;
  for (const auto& e : j["report"]) {
    CHECK(e["pass"] == true);
    if (e.contains("residual")) {
      CHECK(e["residual"] == "0");
      ++residuals;
    }
  }
  CHECK(residuals > 50);

  RunConfig d = make("verify");
  d.N = 3;
  d.beta = "1";
  d.max_n = 6;
  CHECK(run_capture(d).status == 0);
  d.checks = {"triangular"};
  CHECK_THROWS_AS(run_capture(d), ConfigError);
}

TEST_CASE("checks that fail give exit status 1 and a report") {
  RunConfig mo = make("moments");
  mo.alpha = "1/2";
  mo.theta = "1";
  mo.lambdas = {"[2]"};
  mo.samples = 2000;
  mo.tail = 0.9;  // truncation far too coarse: biased low
  auto bad = run_capture(mo);
  CHECK(bad.status == 1);
  auto report = Json::parse(bad.err);
  CHECK(report["status"] == "fail");
  CHECK(report["failures"][0]["check"] == "moment");
}

TEST_CASE("seeded runs are byte-identical and jobs do not change results") {
  RunConfig c = make("moments");
  c.alpha = "1/2";
  c.theta = "1";
  c.samples = 3000;
  c.seed = 7;
  const auto a = run_capture(c).out;
  CHECK(a == run_capture(c).out);
  c.jobs = 3;
  CHECK(a == run_capture(c).out);
  c.seed = 8;
  CHECK(a != run_capture(c).out);

  RunConfig s = make("sample");
  s.kind = "updown";
  s.n = 30;
  s.steps = 200;
  s.record_every = 10;
  s.seed = 5;
  const auto t = run_capture(s).out;
  CHECK(t == run_capture(s).out);
  CHECK(t.rfind("step,t,partition,q1,q2\n", 0) == 0);

  RunConfig w = make("wf");
  w.N = 4;
  w.eta = "3";
  w.steps = 50;
  w.seed = 1;
  const auto x = run_capture(w).out;
  CHECK(x == run_capture(w).out);
  CHECK(x.rfind("step,t,x1,x2,x3,x4\n", 0) == 0);
}

TEST_CASE("output paths honour KINGMAN_OUTPUT_DIR") {
  const auto dir = std::filesystem::temp_directory_path() / "kingman_cli_test";
  std::filesystem::remove_all(dir);
  ::setenv("KINGMAN_OUTPUT_DIR", dir.c_str(), 1);
  RunConfig m = make("measure");
  m.n = 3;
  m.output = "sub/m3.json";
  auto r = run_capture(m);
  ::unsetenv("KINGMAN_OUTPUT_DIR");
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream f(dir / "sub" / "m3.json");
  REQUIRE(f.good());
  auto j = Json::parse(f);
  CHECK(j["[1,1,1]"] == "1/6");
  std::filesystem::remove_all(dir);
}

TEST_CASE("json payloads of the remaining commands") {
  RunConfig g = make("generator");
  g.m = 4;
  g.theta = "1";
  auto j = Json::parse(run_capture(g).out);
  CHECK(j["spectrum"].size() == 4);
  CHECK(j["q_actions"][0]["image"] == "-4 * m[2] + 2 * m[]");

  RunConfig ch = make("chain");
  ch.n = 2;
  ch.theta = "1";
  auto cj = Json::parse(run_capture(ch).out);
  CHECK(cj["reversible"] == true);
  CHECK(cj["spectrum"]["predicted"][1]["value"] == "5/9");

  RunConfig pd = make("sample");
  pd.kind = "pd";
  pd.alpha = "1/2";
  pd.theta = "1";
  pd.samples = 2;
  pd.tail = 1e-3;
  auto pj = Json::parse(run_capture(pd).out);
  CHECK(pj["samples"].size() == 2);
  CHECK(pj["samples"][0]["remainder"].get<double>() < 1e-3);

  RunConfig w = make("wf");
  w.kind = "density";
  w.N = 3;
  w.beta = "1";
  w.point = "0.5,0.3,0.2";
  auto wj = Json::parse(run_capture(w).out);
  CHECK(wj["density"]["value"].get<double>() == doctest::Approx(12.0));  // 3! Gamma(3)
  w.point = "0.5,0.5,0";
  CHECK_THROWS_AS(run_capture(w), ConfigError);
}
