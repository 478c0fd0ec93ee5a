#include "mocktheta/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

namespace mocktheta {

using nlohmann::json;

namespace {

json cplx_json(cplx c) { return {{"re", c.real()}, {"im", c.imag()}}; }

cplx cplx_from(const json& j, const char* what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw ConfigError(std::string(what) + " must be {\"re\": x, \"im\": y}");
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

QExp order_from(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return QExp(j.get<long>());
  throw ConfigError("order must be an integer or a rational string such as \"20\" or \"41/2\"");
}

std::string param_value(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long>());
  if (j.is_array()) {
    std::string s;
    for (const auto& x : j) s += (s.empty() ? "" : ",") + param_value(x);
    return s;
  }
  throw ConfigError("check parameters must be strings, integers or lists of them (no floats)");
}

json result_json(const CheckResult& r) {
  json j{{"name", r.name},         {"kind", to_string(r.kind)},   {"outcome", to_string(r.outcome)},
         {"pass", r.pass},         {"residual", r.residual},      {"tolerance", r.tolerance},
         {"comparisons", r.comparisons}, {"worst", r.worst},      {"detail", r.detail},
         {"elapsed_ms", r.elapsed_ms}};
  j["params"] = r.params;
  j["order"] = r.order ? json(r.order->get_str()) : json(nullptr);
  j["differences"] = r.differences;
  return j;
}

CheckResult error_result(const std::string& name, const std::string& why) {
  CheckResult r;
  r.name = name;
  r.outcome = Outcome::error;
  r.detail = why;
  try {
    r.kind = find_check(name).kind;
  } catch (const UnknownCheck&) {
  }
  return r;
}

}  // namespace

std::string result_to_json(const CheckResult& r, int indent) { return result_json(r).dump(indent); }

SuiteConfig SuiteConfig::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  SuiteConfig c;
  try {
    for (const auto& [key, val] : j.items()) {
      if (key == "checks") {
        c.checks = val.get<std::vector<std::string>>();
      } else if (key == "order") {
        c.order = order_from(val);
      } else if (key == "tol") {
        c.tol = val.get<double>();
        if (!(*c.tol > 0)) throw ConfigError("tol must be positive");
      } else if (key == "points") {
        for (const auto& p : val) {
          if (!p.contains("tau")) throw ConfigError("each point needs a tau");
          const cplx tau = cplx_from(p.at("tau"), "tau");
          const cplx z1 = p.contains("z") ? cplx_from(p.at("z"), "z") : (p.contains("z1") ? cplx_from(p.at("z1"), "z1") : 0.0);
          const cplx z2 = p.contains("z2") ? cplx_from(p.at("z2"), "z2") : 0.0;
          const cplx t = p.contains("t") ? cplx_from(p.at("t"), "t") : 0.0;
          try {
            c.points.emplace_back(tau, z1, z2, t);
          } catch (const ParamDomain& e) {
            throw ConfigError(e.what());
          }
        }
      } else if (key == "parallel") {
        c.parallel = val.get<bool>();
      } else if (key == "params") {
        for (const auto& [name, ps] : val.items())
          for (const auto& [k, v] : ps.items()) c.params[name][k] = param_value(v);
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  } catch (const ParamDomain& e) {
    throw ConfigError(e.what());
  }
  return c;
}

std::string SuiteConfig::to_json() const {
  json j;
  j["checks"] = checks;
  if (order) j["order"] = order->get_str();
  if (tol) j["tol"] = *tol;
  j["points"] = json::array();
  for (const auto& p : points) {
    json pj{{"tau", cplx_json(p.tau)}, {"z", cplx_json(p.z1)}};
    if (p.z2 != 0.0) pj["z2"] = cplx_json(p.z2);
    if (p.t != 0.0) pj["t"] = cplx_json(p.t);
    j["points"].push_back(pj);
  }
  j["parallel"] = parallel;
  if (!params.empty()) j["params"] = params;
  return j.dump(2);
}

SuiteReport run_suite(const SuiteConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> names;
  for (const auto& n : config.checks) {
    if (n == "all") {
      for (const auto& c : list_checks()) names.push_back(c.name);
    } else {
      try {
        find_check(n);
      } catch (const UnknownCheck& e) {
        throw ConfigError(e.what());
      }
      names.push_back(n);
    }
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());

  std::vector<CheckResult> results(names.size());
  auto run_one = [&](std::size_t i) {
    CheckSpec spec;
    spec.name = names[i];
    auto pit = config.params.find(names[i]);
    if (pit != config.params.end()) spec.params = pit->second;
    spec.tolerance = config.tol;
    spec.order = config.order;
    spec.points = config.points;
    try {
      results[i] = run_check(spec);
    } catch (const std::exception& e) {
      results[i] = error_result(names[i], e.what());
    }
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned nthreads = config.parallel ? std::min<unsigned>(hw, unsigned(names.size())) : 1;
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < names.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < names.size();) run_one(i);
      });
    for (auto& th : pool) th.join();
  }

  SuiteReport rep;
  rep.config = config;
  rep.results = std::move(results);
  for (const auto& r : rep.results) {
    if (r.outcome == Outcome::pass) ++rep.passed;
    else if (r.outcome == Outcome::fail) ++rep.failed;
    else ++rep.errors;
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::string SuiteReport::to_json(int indent) const {
  json j;
  j["version"] = version;
  j["config"] = json::parse(config.to_json());
  j["summary"] = {{"passed", passed}, {"failed", failed}, {"errors", errors}, {"total", results.size()},
                  {"elapsed_ms", elapsed_ms}};
  j["results"] = json::array();
  for (const auto& r : results) j["results"].push_back(result_json(r));
  return j.dump(indent);
}

std::string SuiteReport::to_markdown() const {
  std::ostringstream os;
  os << "# mocktheta verification report\n\n";
  os << "version " << version << ", " << passed << " passed, " << failed << " failed, " << errors << " errors, "
     << std::fixed << std::setprecision(1) << elapsed_ms / 1000 << " s\n\n";
  os << "| check | kind | outcome | residual | tolerance | time (ms) | detail |\n";
  os << "|---|---|---|---|---|---|---|\n";
  for (const auto& r : results) {
    std::string detail = r.detail;
    if (!r.differences.empty()) detail = "differs at " + r.differences.front() + (detail.empty() ? "" : "; " + detail);
    if (!r.pass && !r.worst.empty()) detail = "worst: " + r.worst + (detail.empty() ? "" : "; " + detail);
    std::replace(detail.begin(), detail.end(), '|', '/');
    std::ostringstream res;
    res << std::scientific << std::setprecision(2) << r.residual;
    std::ostringstream tol;
    tol << std::scientific << std::setprecision(1) << r.tolerance;
    os << "| " << r.name << " | " << to_string(r.kind) << " | " << to_string(r.outcome) << " | " << res.str() << " | "
       << (r.kind == CheckKind::symbolic ? "exact" : tol.str()) << " | " << std::fixed << std::setprecision(0)
       << r.elapsed_ms << " | " << detail << " |\n";
  }
  return os.str();
}

}  // namespace mocktheta
