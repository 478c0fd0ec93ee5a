#include "mocktheta/special_series.hpp"
#include "mocktheta/verify.hpp"

#include <doctest.h>
#include <json.hpp>

#include <set>

using namespace mocktheta;

namespace {

const HalfInt h = HalfInt::from_twice(1);

CheckResult run(const std::string& name, CheckParams params = {}, std::optional<QExp> order = {}) {
  CheckSpec s;
  s.name = name;
  s.params = std::move(params);
  s.order = order;
  return run_check(s);
}

nlohmann::json without_timings(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  j["summary"].erase("elapsed_ms");
  for (auto& r : j["results"]) r.erase("elapsed_ms");
  return j;
}

double rel(cplx a, cplx b) { return relative_residual(a, b); }

}  // namespace

TEST_CASE("registry metadata") {
  const auto& reg = list_checks();
  CHECK(reg.size() >= 35);
  std::set<std::string> names;
  for (const auto& c : reg) {
    CHECK_FALSE(c.citation.empty());
    CHECK_FALSE(c.defaults.empty());
    CHECK(names.insert(c.name).second);
    if (c.kind == CheckKind::numeric) CHECK(c.tolerance > 0);
  }
  for (const char* n : {"ex9.P9.1.1", "kernel.RPQ", "g.T8.2.S", "lemma3.2.2", "tilde.T5.1.3", "g.orth.N8.1"})
    CHECK(names.count(n) == 1);
  CHECK_THROWS_AS(find_check("no.such.check"), UnknownCheck);
}

TEST_CASE("relative residual") {
  CHECK(relative_residual(0.0, 1e-12) == doctest::Approx(1e-12));
  CHECK(relative_residual(100.0, 101.0) == doctest::Approx(1.0 / 101));
}

TEST_CASE("run_check examples") {
  auto r = run("ex9.P9.1.3", {}, QExp(20));
  CHECK(r.pass);
  CHECK(r.kind == CheckKind::symbolic);
  CHECK(r.differences.empty());
  CHECK(r.order == QExp(20));

  r = run("g.R8.1", {{"m", "3/2"}}, QExp(15));
  CHECK(r.pass);

  CheckSpec s;
  s.name = "g.T8.2.T";
  s.params = {{"i", "3"}, {"m", "1/2"}, {"p", "1"}, {"j", "1/2"}};
  s.points = {EvalPoint(cplx(0.1, 0.9))};
  r = run_check(s);
  CHECK(r.pass);
  CHECK(r.residual < 1e-8);
  CHECK(r.comparisons == 1);
}

TEST_CASE("parameter validation surfaces as ParamDomain") {
  CHECK_THROWS_AS(run("g.R8.1", {{"m", "1"}}), ParamDomain);
  CHECK_THROWS_AS(run("g.T8.2.T", {{"m", "1/2"}, {"p", "5"}}), ParamDomain);
  CHECK_THROWS_AS(run("g.R8.1", {}, QExp(-1)), ParamDomain);
  CHECK_THROWS_AS(run("g.T8.2.T", {{"p", "1/2"}}), ParamDomain);
  CHECK_THROWS_AS(run("nope"), UnknownCheck);
}

TEST_CASE("tolerance plumbing") {
  SuiteConfig cfg;
  cfg.checks = {"theta.L1.2", "kernel.N4.1.iii", "ex9.P9.1.2"};
  cfg.tol = 1e-30;
  const auto rep = run_suite(cfg);
  REQUIRE(rep.results.size() == 3);
  for (const auto& r : rep.results) {
    if (r.kind == CheckKind::numeric) {
      CHECK(r.outcome == Outcome::fail);
      CHECK(r.residual > 0);
      CHECK(r.tolerance == 1e-30);
    } else {
      CHECK(r.pass);
    }
  }
  CHECK(rep.failed == 2);
}

TEST_CASE("suite config parsing") {
  const auto cfg = SuiteConfig::from_json(
      R"({"checks":["ex9.P9.1.1"],"order":"41/2","tol":1e-8,"points":[{"tau":{"re":0.1,"im":0.9},"z":{"re":0.3,"im":0}}],"parallel":false,"params":{"g.R8.1":{"m":["1/2","3/2"]}}})");
  CHECK(cfg.checks == std::vector<std::string>{"ex9.P9.1.1"});
  CHECK(cfg.order == frac(41, 2));
  CHECK(cfg.tol == 1e-8);
  REQUIRE(cfg.points.size() == 1);
  CHECK(cfg.points[0].z1 == cplx(0.3, 0));
  CHECK_FALSE(cfg.parallel);
  CHECK(cfg.params.at("g.R8.1").at("m") == "1/2,3/2");
  const auto back = SuiteConfig::from_json(cfg.to_json());
  CHECK(back.to_json() == cfg.to_json());

  CHECK_THROWS_AS(SuiteConfig::from_json("[1]"), ConfigError);
  CHECK_THROWS_AS(SuiteConfig::from_json("{"), ConfigError);
  CHECK_THROWS_AS(SuiteConfig::from_json(R"({"bogus":1})"), ConfigError);
  CHECK_THROWS_AS(SuiteConfig::from_json(R"({"order":2.5})"), ConfigError);
  CHECK_THROWS_AS(SuiteConfig::from_json(R"({"tol":-1})"), ConfigError);
  CHECK_THROWS_AS(SuiteConfig::from_json(R"({"points":[{"tau":{"re":0,"im":-1}}]})"), ConfigError);
  CHECK_THROWS_AS(SuiteConfig::from_json(R"({"params":{"g.R8.1":{"m":0.5}}})"), ConfigError);
}

TEST_CASE("unknown check names are configuration errors") {
  SuiteConfig cfg;
  cfg.checks = {"ex9.P9.1.1", "ex9.P9.9"};
  try {
    run_suite(cfg);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("ex9.P9.9") != std::string::npos);
  }
}

TEST_CASE("evaluation failures are isolated") {
  SuiteConfig cfg;
  cfg.checks = {"phi.N2.1", "ex9.P9.1.3", "g.R8.1"};
  // z1 = 0 puts the j = 0 denominator of the Appell sum on its pole
  cfg.points = {EvalPoint({0.1, 0.9}, 0.0, {0.2, 0.1})};
  cfg.params["g.R8.1"] = {{"m", "2"}};
  const auto rep = run_suite(cfg);
  REQUIRE(rep.results.size() == 3);
  std::map<std::string, Outcome> by;
  for (const auto& r : rep.results) by[r.name] = r.outcome;
  CHECK(by["phi.N2.1"] == Outcome::error);
  CHECK(by["ex9.P9.1.3"] == Outcome::pass);
  CHECK(by["g.R8.1"] == Outcome::error);
  CHECK(rep.errors == 2);
  CHECK(rep.passed == 1);
}

TEST_CASE("suite output is sorted and deterministic") {
  SuiteConfig cfg;
  cfg.checks = {"ex9.relations", "kernel.L4.1", "g.orth.N8.1", "theta.L1.4", "ex9.relations"};
  const auto a = run_suite(cfg);
  cfg.parallel = false;
  const auto b = run_suite(cfg);
  REQUIRE(a.results.size() == 4);
  for (std::size_t i = 1; i < a.results.size(); ++i) CHECK(a.results[i - 1].name < a.results[i].name);
  auto ja = without_timings(a.to_json());
  auto jb = without_timings(b.to_json());
  ja.erase("config");
  jb.erase("config");
  CHECK(ja == jb);
  CHECK(ja["version"] == toolkit_version);
  CHECK(ja["summary"]["passed"] == 4);
  const std::string md = a.to_markdown();
  CHECK(md.find("| check | kind | outcome |") != std::string::npos);
  CHECK(md.find("| ex9.relations | SYMBOLIC | PASS |") != std::string::npos);
}

TEST_CASE("result JSON") {
  const auto r = run("ex9.P9.1.1", {}, QExp(10));
  const auto j = nlohmann::json::parse(result_to_json(r));
  CHECK(j["name"] == "ex9.P9.1.1");
  CHECK(j["kind"] == "SYMBOLIC");
  CHECK(j["outcome"] == "PASS");
  CHECK(j["order"] == "10");
  CHECK(j["differences"].empty());
}

// Exact identities re-evaluated through the independent numeric eta product.
TEST_CASE("symbolic and numeric pipelines agree") {
  const cplx tau{0.0, 1.1};
  const QExp o = 20;
  auto val = [&](const FormalSeries& s) { return series_eval(s, tau).value; };
  const cplx e1 = eta_num(1.0, tau), eh = eta_num(0.5, tau), e2 = eta_num(2.0, tau);
  CHECK(rel(val(gtilde_series(1, o)), 0.5 * std::pow(e1, 4) / (eh * e2)) < 1e-8);
  CHECK(rel(val(gtilde_series(2, o)), 0.5 * e1 * eh) < 1e-8);
  CHECK(rel(val(gtilde_series(3, o)), e1 * e2) < 1e-8);
  CHECK(rel(val(theta_nullwert_series(h, 1, Sign::plus, o)), e1 * e1 / eh) < 1e-8);
  CHECK(rel(val(theta_nullwert_series(h, 1, Sign::minus, o)), eh * e2 / e1) < 1e-8);
  BracketSumSpec p1{1, frac(1, 4), frac(1, 2), 0, BracketPhase::minus_one_pow_j, BracketVariant::shifted};
  CHECK(rel(val(bracket_sum_series(p1, o)), 0.5 * (std::pow(e1, 4) / (eh * e2) - eh * e2 / e1)) < 1e-8);
  p1.phase = BracketPhase::minus_one_pow_r;
  CHECK(rel(val(bracket_sum_series(p1, o)), 0.5 * (e1 * eh - e1 * e1 / eh)) < 1e-8);
  // every registered symbolic check carries the same cross-evaluation and stays silent when it agrees
  for (const auto& c : list_checks()) {
    if (c.kind != CheckKind::symbolic) continue;
    const auto r = run(c.name);
    INFO(c.name);
    CHECK(r.pass);
    CHECK(r.detail.find("differ") == std::string::npos);
  }
}
