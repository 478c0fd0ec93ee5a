#include "mocktheta/cli.hpp"
#include "mocktheta/special_series.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace mocktheta;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "mocktheta");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("complex parsing") {
  CHECK(parse_complex("0.1+0.9i") == cplx(0.1, 0.9));
  CHECK(parse_complex("-0.31-0.07i") == cplx(-0.31, -0.07));
  CHECK(parse_complex("1.1i") == cplx(0, 1.1));
  CHECK(parse_complex("-i") == cplx(0, -1));
  CHECK(parse_complex("2") == cplx(2, 0));
  CHECK(parse_complex("1e-3+2e1i") == cplx(1e-3, 20));
  CHECK_THROWS_AS(parse_complex("abc"), ParamDomain);
  CHECK_THROWS_AS(parse_complex(""), ParamDomain);
}

TEST_CASE("expand gtilde 3 as JSON") {
  const auto r = cli({"expand", "--fn", "gtilde", "--n", "3", "--order", "20", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["order"] == "20/1");
  CHECK(j["terms"][0]["exp"] == "1/8");
  CHECK(j["terms"][0]["re"] == "1/1");
  CHECK(j["terms"][0]["im"] == "0/1");
}

TEST_CASE("expand output round-trips") {
  const auto r = cli({"expand", "--fn", "g", "--i", "1", "--m", "3/2", "--p", "2", "--k", "1/2", "--order", "12", "--json"});
  REQUIRE(r.code == 0);
  CHECK(series_from_json(r.out) == g_series(GFamilyIndex(1, HalfInt::from_twice(3), 2, HalfInt::from_twice(1)), 12));
  const auto b = cli({"expand", "--fn", "bracket", "--alpha", "1", "--c", "1/2", "--beta", "1/2", "--d", "1/2", "--phase", "j",
                      "--variant", "shifted", "--order", "10", "--json"});
  REQUIRE(b.code == 0);
  CHECK(series_from_json(b.out) == eta_quotient_series(EtaSpec{{{1, 1}, {2, 1}}}, 10));
  const auto t = cli({"expand", "--fn", "theta0", "--j", "1/2", "--m", "1", "--order", "3"});
  CHECK(t.code == 0);
  CHECK(t.out.rfind("1*q^(1/16) + 1*q^(9/16)", 0) == 0);
  CHECK(cli({"expand", "--fn", "eta", "--scale", "1/2", "--order", "5"}).code == 0);
}

TEST_CASE("check verb exit codes") {
  auto r = cli({"check", "--name", "ex9.P9.1.1", "--order", "20"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  r = cli({"check", "--name", "theta.L1.2", "--tol", "1e-30"});
  CHECK(r.code == 1);
  r = cli({"check", "--name", "g.T8.2.T", "--i", "3", "--m", "1/2", "--p", "1", "--j", "1/2", "--tau", "0.1+0.9i", "--json"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["residual"].get<double>() < 1e-8);
  r = cli({"check", "--name", "phi.N2.1", "--tau", "0.1+0.9i", "--z", "0", "--z2", "0.2+0.1i"});
  CHECK(r.code == 3);
  r = cli({"check", "--name", "does.not.exist"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("eval at the antidiagonal vanishes") {
  const auto r = cli({"eval", "--fn", "phi", "--sign", "minus", "--m", "1/2", "--s", "1/2", "--part", "full", "--tau", "0.1+0.9i",
                      "--z1", "0.31+0.07i", "--z2", "-0.31-0.07i", "--json"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["modulus"].get<double>() < 1e-9);
}

TEST_CASE("eval covers every function") {
  const std::vector<std::vector<std::string>> cases = {
      {"--fn", "theta", "--j", "1/2", "--m", "3/2", "--z", "0.3"},
      {"--fn", "eta", "--scale", "2"},
      {"--fn", "phiadd", "--m", "3/2", "--z1", "0.31+0.07i", "--z2", "0.13-0.04i"},
      {"--fn", "phitilde", "--m", "3/2", "--z1", "0.31+0.07i", "--z2", "0.13-0.04i"},
      {"--fn", "R", "--j", "1/2", "--m", "3/2", "--w", "0.2+0.1i"},
      {"--fn", "R", "--j", "1/2", "--m", "3/2", "--a", "1/2", "--b", "-1/2"},
      {"--fn", "P", "--j", "1/2", "--m", "3/2", "--w", "0.2+0.1i", "--width", "10"},
      {"--fn", "Q", "--j", "1/2", "--m", "3/2", "--w", "0.2+0.1i"},
      {"--fn", "psi", "--i", "2", "--m", "1/2", "--z", "0.31+0.07i"},
      {"--fn", "xi", "--i", "1", "--m", "1/2", "--p", "1", "--z", "0.31+0.07i"},
      {"--fn", "upsilon", "--i", "3", "--m", "3/2", "--p", "2", "--z", "0.31+0.07i"},
      {"--fn", "G", "--i", "3", "--m", "3/2", "--p", "2", "--z", "0.31+0.07i"},
  };
  for (auto args : cases) {
    args.insert(args.begin(), "eval");
    args.insert(args.end(), {"--tau", "0.1+0.9i"});
    const auto r = cli(args);
    INFO(args[2]);
    CHECK(r.code == 0);
    CHECK(r.out.find("|value|") != std::string::npos);
  }
}

TEST_CASE("usage errors exit 2") {
  CHECK(cli({"expand", "--fn", "g", "--i", "1", "--m", "0.5", "--p", "0", "--k", "1/2", "--order", "10"}).code == 2);
  CHECK(cli({"expand", "--fn", "eta", "--order", "2.5"}).code == 2);
  CHECK(cli({"expand", "--fn", "eta", "--order", "0"}).code == 2);
  CHECK(cli({"expand", "--fn", "nope", "--order", "3"}).code == 2);
  CHECK(cli({"expand", "--order", "3"}).code == 2);
  CHECK(cli({"eval", "--fn", "theta", "--j", "1/2", "--m", "1.5", "--tau", "i"}).code == 2);
  CHECK(cli({"eval", "--fn", "theta", "--j", "1/2", "--m", "3/2", "--tau", "0.1-0.9i"}).code == 2);
  CHECK(cli({"check", "--name", "g.R8.1", "--m", "1"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"list", "--bogus"}).code == 2);
}

TEST_CASE("list verb") {
  const auto r = cli({"list", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.size() >= 35);
  CHECK(j[0].contains("citation"));
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("suite verb with config file and report") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "mocktheta_cli_test";
  fs::create_directories(dir);
  const fs::path cfg = dir / "cfg.json", out = dir / "report.json", md = dir / "report.md";
  {
    std::ofstream os(cfg);
    os << R"({"checks":["ex9.P9.1.3","g.orth.N8.1"],"parallel":false})";
  }
  auto r = cli({"suite", "--config", cfg.string(), "--out", out.string()});
  CHECK(r.code == 0);
  REQUIRE(fs::exists(out));
  CHECK_FALSE(fs::exists(fs::path(out.string() + ".tmp")));
  std::ifstream is(out);
  const auto j = nlohmann::json::parse(is);
  CHECK(j["summary"]["passed"] == 2);
  r = cli({"suite", "--config", cfg.string(), "--out", md.string()});
  CHECK(r.code == 0);
  std::ifstream ms(md);
  std::string first;
  std::getline(ms, first);
  CHECK(first == "# mocktheta verification report");
  {
    std::ofstream os(cfg);
    os << R"({"checks":["theta.L1.2"],"tol":1e-30})";
  }
  CHECK(cli({"suite", "--config", cfg.string()}).code == 1);
  {
    std::ofstream os(cfg);
    os << R"({"checks":["nope"]})";
  }
  CHECK(cli({"suite", "--config", cfg.string()}).code == 2);
  CHECK(cli({"suite", "--config", (dir / "missing.json").string()}).code == 2);
  fs::remove_all(dir);
}
