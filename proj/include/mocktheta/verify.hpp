#pragma once

#include "mocktheta/numerics.hpp"
#include "mocktheta/qseries.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mocktheta {

inline constexpr const char* toolkit_version = "0.1.0";

enum class CheckKind { symbolic, numeric };
enum class Outcome { pass, fail, error };

const char* to_string(CheckKind k);
const char* to_string(Outcome o);

using CheckParams = std::map<std::string, std::string>;

struct CheckSpec {
  std::string name;
  CheckParams params;
  std::optional<double> tolerance;
  std::optional<QExp> order;
  std::vector<EvalPoint> points;
  NumericParams numeric;
};

struct CheckResult {
  std::string name;
  CheckKind kind = CheckKind::numeric;
  CheckParams params;
  Outcome outcome = Outcome::pass;
  bool pass = false;
  double residual = 0;
  double tolerance = 0;
  std::optional<QExp> order;
  std::vector<std::string> differences;
  std::size_t comparisons = 0;
  std::string worst;
  std::string detail;
  double elapsed_ms = 0;
};

class CheckContext;
using CheckFn = std::function<void(CheckContext&)>;

struct CheckInfo {
  std::string name;
  CheckKind kind;
  std::string citation;
  std::string defaults;
  double tolerance;
  CheckFn run;
};

const std::vector<CheckInfo>& list_checks();
const CheckInfo& find_check(const std::string& name);
CheckResult run_check(const CheckSpec& spec);

class CheckContext {
 public:
  CheckContext(const CheckInfo& info, const CheckSpec& spec);

  // Parameter sweeps: user value if given, else the defaults.
  std::vector<HalfInt> halfints(const std::string& key, const std::vector<HalfInt>& defaults) const;
  std::vector<long> ints(const std::string& key, const std::vector<long>& defaults) const;
  std::vector<HalfInt> odd_half_m(const std::vector<HalfInt>& defaults = {}) const;
  QExp order(const QExp& fallback = 20) const;
  std::vector<EvalPoint> points(const std::vector<EvalPoint>& defaults) const;
  const NumericParams& numeric() const { return spec_.numeric; }

  void numeric(const std::string& label, cplx lhs, cplx rhs);
  void residual(const std::string& label, double r);
  void symbolic(const std::string& label, const FormalSeries& lhs, const FormalSeries& rhs, const QExp& order);
  void note(const std::string& text);

  CheckResult finish(std::chrono::steady_clock::duration elapsed) &&;

 private:
  const CheckInfo& info_;
  const CheckSpec& spec_;
  CheckResult result_;
};

double relative_residual(cplx lhs, cplx rhs);

// Default evaluation points.
std::vector<EvalPoint> generic_points();
std::vector<EvalPoint> s_law_points();
std::vector<HalfInt> default_m();

struct SuiteConfig {
  std::vector<std::string> checks{"all"};
  std::optional<QExp> order;
  std::optional<double> tol;
  std::vector<EvalPoint> points;
  bool parallel = true;
  std::map<std::string, CheckParams> params;

  static SuiteConfig from_json(const std::string& text);
  std::string to_json() const;
};

struct SuiteReport {
  std::string version = toolkit_version;
  SuiteConfig config;
  std::vector<CheckResult> results;
  std::size_t passed = 0, failed = 0, errors = 0;
  double elapsed_ms = 0;

  std::string to_json(int indent = 2) const;
  std::string to_markdown() const;
};

SuiteReport run_suite(const SuiteConfig& config);
std::string result_to_json(const CheckResult& r, int indent = -1);

}  // namespace mocktheta
