#include "mocktheta/verify.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace mocktheta {

const char* to_string(CheckKind k) { return k == CheckKind::symbolic ? "SYMBOLIC" : "NUMERIC"; }

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "PASS";
    case Outcome::fail: return "FAIL";
    default: return "ERROR";
  }
}

double relative_residual(cplx lhs, cplx rhs) {
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return std::abs(lhs - rhs) / scale;
}

std::vector<EvalPoint> generic_points() {
  const cplx taus[] = {{0.1, 0.9}, {-0.23, 1.13}, {0.05, 1.5}};
  const cplx za{0.31, 0.07}, zb{0.13, -0.04};
  std::vector<EvalPoint> pts;
  for (cplx t : taus) {
    pts.emplace_back(t, za, zb);
    pts.emplace_back(t, zb, za);
  }
  return pts;
}

std::vector<EvalPoint> s_law_points() {
  const cplx za{0.31, 0.07}, zb{0.13, -0.04};
  return {EvalPoint({0.0, 1.0}, za, zb), EvalPoint({0.2, 1.0}, zb, za)};
}

std::vector<HalfInt> default_m() { return {HalfInt::from_twice(1), HalfInt::from_twice(3)}; }

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

}  // namespace

CheckContext::CheckContext(const CheckInfo& info, const CheckSpec& spec) : info_(info), spec_(spec) {
  result_.name = info.name;
  result_.kind = info.kind;
  result_.params = spec.params;
  result_.tolerance = spec.tolerance.value_or(info.tolerance);
}

std::vector<HalfInt> CheckContext::halfints(const std::string& key, const std::vector<HalfInt>& defaults) const {
  auto it = spec_.params.find(key);
  if (it == spec_.params.end()) return defaults;
  std::vector<HalfInt> out;
  for (const auto& s : split_list(it->second)) out.push_back(HalfInt::parse(s));
  return out;
}

std::vector<long> CheckContext::ints(const std::string& key, const std::vector<long>& defaults) const {
  auto it = spec_.params.find(key);
  if (it == spec_.params.end()) return defaults;
  std::vector<long> out;
  for (const auto& s : split_list(it->second)) {
    QExp q = parse_rational(s);
    if (q.get_den() != 1) throw ParamDomain("parameter '" + key + "' must be an integer, got " + s);
    out.push_back(q.get_num().get_si());
  }
  return out;
}

std::vector<HalfInt> CheckContext::odd_half_m(const std::vector<HalfInt>& defaults) const {
  auto ms = halfints("m", defaults.empty() ? default_m() : defaults);
  for (const auto& m : ms) check_odd_half_m(m);
  return ms;
}

QExp CheckContext::order(const QExp& fallback) const {
  QExp o = spec_.order.value_or(fallback);
  if (sgn(o) <= 0) throw ParamDomain("order must be positive");
  return o;
}

std::vector<EvalPoint> CheckContext::points(const std::vector<EvalPoint>& defaults) const {
  return spec_.points.empty() ? defaults : spec_.points;
}

void CheckContext::residual(const std::string& label, double r) {
  const double v = std::isnan(r) ? std::numeric_limits<double>::infinity() : r;
  if (++result_.comparisons == 1 || v > result_.residual) {
    result_.residual = v;
    result_.worst = label;
  }
}

void CheckContext::numeric(const std::string& label, cplx lhs, cplx rhs) { residual(label, relative_residual(lhs, rhs)); }

void CheckContext::symbolic(const std::string& label, const FormalSeries& lhs, const FormalSeries& rhs, const QExp& order) {
  EqualityReport rep = series_equal_to_order(lhs, rhs, order);
  ++result_.comparisons;
  result_.order = order;
  for (const auto& e : rep.differences) {
    if (result_.differences.size() < 16) result_.differences.push_back(label + ": q^" + e.get_str());
    else if (result_.differences.size() == 16) result_.differences.push_back("...");
  }
  if (!rep.equal) {
    result_.residual = std::max(result_.residual, double(rep.differences.size()));
    if (result_.worst.empty()) result_.worst = label;
  }
}

void CheckContext::note(const std::string& text) {
  if (!result_.detail.empty()) result_.detail += "; ";
  result_.detail += text;
}

CheckResult CheckContext::finish(std::chrono::steady_clock::duration elapsed) && {
  result_.elapsed_ms = std::chrono::duration<double, std::milli>(elapsed).count();
  if (result_.comparisons == 0) {
    result_.outcome = Outcome::error;
    note("no comparisons were made");
  } else if (info_.kind == CheckKind::symbolic) {
    result_.outcome = result_.differences.empty() ? Outcome::pass : Outcome::fail;
  } else {
    result_.outcome = result_.residual < result_.tolerance ? Outcome::pass : Outcome::fail;
  }
  result_.pass = result_.outcome == Outcome::pass;
  return std::move(result_);
}

CheckResult run_check(const CheckSpec& spec) {
  const CheckInfo& info = find_check(spec.name);
  spec.numeric.validate();
  CheckContext ctx(info, spec);
  const auto start = std::chrono::steady_clock::now();
  try {
    info.run(ctx);
  } catch (const ParamDomain&) {
    throw;
  } catch (const std::exception& e) {
    ctx.note(std::string("evaluation error: ") + e.what());
    CheckResult r = std::move(ctx).finish(std::chrono::steady_clock::now() - start);
    r.outcome = Outcome::error;
    r.pass = false;
    return r;
  }
  return std::move(ctx).finish(std::chrono::steady_clock::now() - start);
}

}  // namespace mocktheta
