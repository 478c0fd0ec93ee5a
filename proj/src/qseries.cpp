#include "mocktheta/qseries.hpp"

#include "mocktheta/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace mocktheta {

GaussRat GaussRat::i_pow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

GaussRat operator/(const GaussRat& a, const GaussRat& b) {
  mpq_class n = b.re * b.re + b.im * b.im;
  if (sgn(n) == 0) throw std::domain_error("division by zero Gaussian rational");
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

std::string to_string(const GaussRat& c) {
  if (sgn(c.im) == 0) return c.re.get_str();
  if (sgn(c.re) == 0) return c.im.get_str() + "i";
  return "(" + c.re.get_str() + (sgn(c.im) > 0 ? "+" : "") + c.im.get_str() + "i)";
}

FormalSeries FormalSeries::monomial(const GaussRat& c, const QExp& e, const QExp& order) {
  FormalSeries s(order);
  s.add_term(e, c);
  return s;
}

GaussRat FormalSeries::coeff(const QExp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussRat() : it->second;
}

void FormalSeries::add_term(const QExp& e, const GaussRat& c) {
  if (e >= order_ || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FormalSeries FormalSeries::truncated(const QExp& order) const {
  FormalSeries r(std::min(order, order_));
  for (auto it = terms_.begin(); it != terms_.end() && it->first < r.order_; ++it) r.terms_.insert(*it);
  return r;
}

FormalSeries FormalSeries::scaled(const GaussRat& c) const {
  FormalSeries r(order_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, v * c);
  return r;
}

FormalSeries FormalSeries::shifted(const QExp& e) const {
  FormalSeries r(order_ + e);
  for (const auto& [x, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), x + e, v);
  return r;
}

FormalSeries series_add(const FormalSeries& a, const FormalSeries& b) {
  FormalSeries r(std::min(a.order(), b.order()));
  for (const auto& [e, c] : a.terms()) r.add_term(e, c);
  for (const auto& [e, c] : b.terms()) r.add_term(e, c);
  return r;
}

FormalSeries series_sub(const FormalSeries& a, const FormalSeries& b) {
  FormalSeries r(std::min(a.order(), b.order()));
  for (const auto& [e, c] : a.terms()) r.add_term(e, c);
  for (const auto& [e, c] : b.terms()) r.add_term(e, -c);
  return r;
}

FormalSeries series_mul(const FormalSeries& a, const FormalSeries& b) {
  QExp order = std::min(a.order() + b.valuation(), b.order() + a.valuation());
  FormalSeries r(order);
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      QExp e = ea + eb;
      if (e >= order) break;
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

FormalSeries series_invert(const FormalSeries& a) {
  if (a.is_zero()) throw ZeroLeadingTerm();
  const QExp v = a.valuation();
  const GaussRat lead_inv = GaussRat(1) / a.terms().begin()->second;
  const QExp limit = a.order() - v;

  // a = lead * q^v * (1 + u); invert 1 + u by the recurrence b_e = -sum_f u_f b_{e-f}.
  std::vector<std::pair<QExp, GaussRat>> u;
  for (auto it = std::next(a.terms().begin()); it != a.terms().end(); ++it)
    u.emplace_back(it->first - v, it->second * lead_inv);

  FormalSeries inv(limit);
  std::set<QExp> pending{QExp(0)};
  while (!pending.empty()) {
    QExp e = *pending.begin();
    pending.erase(pending.begin());
    GaussRat c = sgn(e) == 0 ? GaussRat(1) : GaussRat();
    for (const auto& [f, uf] : u) {
      if (f > e) break;
      auto it = inv.terms().find(e - f);
      if (it != inv.terms().end()) c -= uf * it->second;
    }
    inv.add_term(e, c);
    for (const auto& [f, uf] : u) {
      QExp n = e + f;
      if (n >= limit) break;
      pending.insert(n);
    }
  }
  return inv.scaled(lead_inv).shifted(-v);
}

FormalSeries series_pow(const FormalSeries& a, long n) {
  if (n < 0) return series_pow(series_invert(a), -n);
  FormalSeries result = FormalSeries::one(a.order() - a.valuation());
  FormalSeries base = a;
  bool first = true;
  while (n > 0) {
    if (n & 1) {
      result = first ? base : series_mul(result, base);
      first = false;
    }
    n >>= 1;
    if (n > 0) base = series_mul(base, base);
  }
  return result;
}

EqualityReport series_equal_to_order(const FormalSeries& a, const FormalSeries& b, const QExp& order) {
  if (order > a.order() || order > b.order())
    throw InsufficientOrder("comparison order " + to_string(order) + " exceeds known order (" +
                            to_string(a.order()) + ", " + to_string(b.order()) + ")");
  EqualityReport rep;
  rep.order = order;
  FormalSeries d = series_sub(a.truncated(order), b.truncated(order));
  for (const auto& [e, c] : d.terms()) rep.differences.push_back(e);
  rep.equal = rep.differences.empty();
  return rep;
}

SeriesValue series_eval(const FormalSeries& a, cplx tau) {
  if (!(tau.imag() > 0)) throw std::domain_error("series_eval needs Im tau > 0");
  const cplx two_pi_i_tau = 2.0 * std::numbers::pi * cplx(0, 1) * tau;
  cplx sum = 0;
  double cmax = 0;
  for (const auto& [e, c] : a.terms()) {
    sum += c.to_complex() * std::exp(two_pi_i_tau * e.get_d());
    cmax = std::max(cmax, std::abs(c.to_complex()));
  }
  const double aq = std::exp(-2.0 * std::numbers::pi * tau.imag());
  const double tail = cmax * std::pow(aq, a.order().get_d()) / (1.0 - aq);
  return {sum, tail};
}

std::string series_to_json(const FormalSeries& a, int indent) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : a.terms())
    terms.push_back({{"exp", to_string(e)}, {"re", to_string(c.re)}, {"im", to_string(c.im)}});
  nlohmann::json j{{"terms", terms}, {"order", to_string(a.order())}};
  return j.dump(indent);
}

FormalSeries series_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParamDomain(std::string("bad series JSON: ") + e.what());
  }
  auto field = [](const nlohmann::json& o, const char* key) {
    if (!o.contains(key) || !o[key].is_string()) throw ParamDomain(std::string("series JSON missing '") + key + "'");
    return parse_rational(o[key].get<std::string>());
  };
  FormalSeries s(field(j, "order"));
  if (!j.contains("terms") || !j["terms"].is_array()) throw ParamDomain("series JSON missing 'terms'");
  for (const auto& t : j["terms"]) s.add_term(field(t, "exp"), GaussRat(field(t, "re"), field(t, "im")));
  return s;
}

std::string series_to_text(const FormalSeries& a, std::size_t max_terms) {
  std::ostringstream os;
  std::size_t n = 0;
  for (const auto& [e, c] : a.terms()) {
    if (n++ == max_terms) {
      os << " + ...";
      break;
    }
    if (n > 1) os << " + ";
    os << to_string(c) << "*q^(" << e.get_str() << ")";
  }
  if (n == 0) os << "0";
  os << " + O(q^(" << a.order().get_str() << "))";
  return os.str();
}

}  // namespace mocktheta
