#include "mocktheta/numerics.hpp"

#include <string>

namespace mocktheta {

void NumericParams::validate() const {
  if (!(tol_abs > 0)) throw ParamDomain("tol_abs must be positive");
  if (max_terms < 10) throw ParamDomain("max_terms must be at least 10");
  if (!(pole_guard >= 0)) throw ParamDomain("pole_guard must be non-negative");
  if (consecutive_small < 1) throw ParamDomain("consecutive_small must be at least 1");
}

EvalPoint::EvalPoint(cplx tau_, cplx z1_, cplx z2_, cplx t_) : tau(tau_), z1(z1_), z2(z2_), t(t_) {
  if (!(tau.imag() > 0)) throw ParamDomain("Im tau must be positive");
}

double e_kernel(double x) { return std::erf(std::sqrt(pi) * x); }

double log_erfc(double x) {
  if (x < 25.0) return std::log(std::erfc(x));
  const double x2 = x * x;
  return -x2 - std::log(x * std::sqrt(pi)) + std::log1p(-0.5 / x2 + 0.75 / (x2 * x2) - 1.875 / (x2 * x2 * x2));
}

void check_odd_half_m(const HalfInt& m) {
  if (!m.positive() || !m.is_odd_half()) throw ParamDomain("m must be a positive half-odd integer, got " + m.str());
}

void check_p_range(const HalfInt& m, long p) {
  if (p < 0 || QExp(p) > m.value() * 2) throw ParamDomain("p must satisfy 0 <= p <= 2m, got " + std::to_string(p));
}

cplx theta_num(Sign sign, const HalfInt& j, const HalfInt& m, cplx tau, cplx z, const NumericParams& np) {
  if (!m.positive()) throw ParamDomain("theta index m must be positive");
  if (!(tau.imag() > 0)) throw ParamDomain("Im tau must be positive");
  const double mm = m.to_double();
  const double off = j.to_double() / (2 * mm);
  const long center = detail::round_to_long(-z.imag() / (2 * tau.imag()) - off);
  auto term = [&](long n) {
    const double x = n + off;
    return double(sign_pow(sign, n)) * std::exp(2.0 * pi * I * mm * (x * z + x * x * tau));
  };
  return detail::sum_lattice(term, center, 1, np, "theta");
}

cplx theta_diff(Sign sign, const HalfInt& k, const HalfInt& m, cplx tau, cplx z, const NumericParams& np) {
  return theta_num(sign, k, m, tau, z, np) - theta_num(sign, -k, m, tau, z, np);
}

cplx eta_num(double scale, cplx tau) {
  if (!(tau.imag() > 0)) throw ParamDomain("Im tau must be positive");
  if (!(scale > 0)) throw ParamDomain("eta scale must be positive");
  const cplx qs = qpow(tau, scale);
  cplx prod = qpow(tau, scale / 24.0);
  cplx qn = qs;
  while (std::abs(qn) >= 1e-17) {
    prod *= 1.0 - qn;
    qn *= qs;
  }
  return prod;
}

cplx eta_num(const QExp& scale, cplx tau) { return eta_num(scale.get_d(), tau); }

cplx mumford_theta(int ab, cplx tau, cplx z, const NumericParams& np) {
  double a = 0, b = 0;
  switch (ab) {
    case 11: a = 1, b = 1; break;
    case 10: a = 1; break;
    case 1: b = 1; break;
    case 0: break;
    default: throw ParamDomain("Mumford theta characteristic must be 00, 01, 10 or 11");
  }
  const long center = detail::round_to_long(-z.imag() / tau.imag() - a / 2);
  auto term = [&](long n) {
    const double x = n + a / 2;
    return std::exp(pi * I * x * x * tau + 2.0 * pi * I * x * (z + b / 2));
  };
  return detail::sum_lattice(term, center, 1, np, "mumford theta");
}

}  // namespace mocktheta
