#include "mocktheta/numerics.hpp"

namespace mocktheta {

namespace {

const HalfInt half = HalfInt::from_twice(1);

void check_family(int i) {
  if (i < 1 || i > 3) throw ParamDomain("family index i must be 1, 2 or 3");
}

cplx guarded_div(cplx num, cplx den, double guard, const char* where) {
  if (std::abs(den) < guard) throw NearPole(where, 0);
  return num / den;
}

}  // namespace

cplx psi_num(int i, const HalfInt& m, cplx tau, cplx z, const NumericParams& np) {
  check_family(i);
  check_odd_half_m(m);
  switch (i) {
    case 1:
      return phi_tilde_num(Sign::minus, m, half, PhiPart::full, EvalPoint(tau, z / 2.0 + tau / 2.0 - 0.5, z / 2.0 - tau / 2.0 + 0.5),
                           np, QExp(1, 2));
    case 2:
      return phi_tilde_num(Sign::minus, m, half, PhiPart::full, EvalPoint(tau, z / 2.0 + tau / 2.0, z / 2.0 - tau / 2.0), np,
                           QExp(1, 2));
    default:
      return phi_tilde_num(Sign::minus, m, half, PhiPart::full, EvalPoint(tau, z / 2.0 - 0.5, z / 2.0 + 0.5), np, QExp(0));
  }
}

cplx xi_num(int i, const HalfInt& m, long p, cplx tau, cplx z, const NumericParams& np) {
  check_family(i);
  check_odd_half_m(m);
  check_p_range(m, p);
  const HalfInt mt = m + half;
  switch (i) {
    case 1:
      return qpow(tau, -m.to_double() / 4) * theta_num(Sign::minus, m.times(2 * p + 1), mt, tau, 0.0, np) *
             psi_num(1, m, tau, z, np);
    case 2:
      return qpow(tau, -m.to_double() / 4) * theta_num(Sign::plus, m.times(2 * p + 1), mt, tau, 0.0, np) *
             psi_num(2, m, tau, z, np);
    default:
      return theta_num(Sign::minus, m.times(2 * p), mt, tau, 0.0, np) * psi_num(3, m, tau, z, np);
  }
}

cplx upsilon_num(int i, const HalfInt& m, long p, cplx tau, cplx z, const NumericParams& np) {
  check_family(i);
  check_odd_half_m(m);
  check_p_range(m, p);
  const HalfInt mt = m + half;
  const cplx eta3 = std::pow(eta_num(1.0, tau), 3);
  switch (i) {
    case 1: {
      const HalfInt j = HalfInt(p) + half;
      return -I * eta3 *
             guarded_div(theta_diff(Sign::minus, j, mt, tau, z, np), theta_num(Sign::plus, 0, half, tau, z, np),
                         np.pole_guard, "upsilon_1");
    }
    case 2: {
      const HalfInt j = HalfInt(p) + half;
      return eta3 * guarded_div(theta_diff(Sign::plus, j, mt, tau, z, np), theta_num(Sign::minus, 0, half, tau, z, np),
                                np.pole_guard, "upsilon_2");
    }
    default:
      return -I * eta3 *
             guarded_div(theta_diff(Sign::minus, HalfInt(p), mt, tau, z, np), theta_num(Sign::plus, half, half, tau, z, np),
                         np.pole_guard, "upsilon_3");
  }
}

cplx G_num(int i, const HalfInt& m, long p, cplx tau, cplx z, const NumericParams& np) {
  return xi_num(i, m, p, tau, z, np) - upsilon_num(i, m, p, tau, z, np);
}

}  // namespace mocktheta
