#include "checks.hpp"

namespace mocktheta::checks {

namespace {

const HalfInt one = HalfInt(1);

FormalSeries eta_q(std::vector<EtaFactor> f, const QExp& order) { return eta_quotient_series(EtaSpec{std::move(f)}, order); }

FormalSeries halved(const FormalSeries& s) { return s.scaled(GaussRat(QExp(1, 2))); }

// eta^4 / (eta(tau/2) eta(2tau))
FormalSeries eta_a(const QExp& o) { return eta_q({{1, 4}, {QExp(1, 2), -1}, {2, -1}}, o); }
// eta(tau/2) eta(2tau) / eta
FormalSeries eta_b(const QExp& o) { return eta_q({{QExp(1, 2), 1}, {2, 1}, {1, -1}}, o); }
// eta eta(tau/2)
FormalSeries eta_c(const QExp& o) { return eta_q({{1, 1}, {QExp(1, 2), 1}}, o); }
// eta^2 / eta(tau/2)
FormalSeries eta_d(const QExp& o) { return eta_q({{1, 2}, {QExp(1, 2), -1}}, o); }
// eta eta(2tau)
FormalSeries eta_e(const QExp& o) { return eta_q({{1, 1}, {2, 1}}, o); }

FormalSeries closed_form(int part, const QExp& o) {
  switch (part) {
    case 1: return halved(eta_a(o) - eta_b(o));
    case 2: return halved(eta_c(o) - eta_d(o));
    default: return eta_e(o);
  }
}

FormalSeries bracket_side(int part, const QExp& o) {
  const BracketSumSpec spec{1,
                            part == 3 ? QExp(1, 2) : QExp(1, 4),
                            QExp(1, 2),
                            part == 3 ? QExp(1, 2) : QExp(0),
                            part == 2 ? BracketPhase::minus_one_pow_r : BracketPhase::minus_one_pow_j,
                            BracketVariant::shifted};
  return bracket_sum_series(spec, o);
}

// tilde g_n: bracket sum plus half a theta nullwert for n = 1, 2
FormalSeries gtilde_display(int n, const QExp& o) {
  if (n == 3) return bracket_side(3, o);
  return bracket_side(n, o) + halved(theta_nullwert_series(half(), one, n == 1 ? Sign::minus : Sign::plus, o));
}

FormalSeries gtilde_closed(int n, const QExp& o) {
  switch (n) {
    case 1: return halved(eta_a(o));
    case 2: return halved(eta_c(o));
    default: return eta_e(o);
  }
}

void cross_eval(CheckContext& ctx, const std::string& tag, const FormalSeries& a, const FormalSeries& b) {
  const cplx tau{0.0, 1.1};
  const double r = relative_residual(series_eval(a, tau).value, series_eval(b, tau).value);
  if (r >= 1e-8) ctx.note(label(tag, ": values at tau=1.1i differ by ", r));
}

void eta_identity(CheckContext& ctx, int part) {
  const QExp o = ctx.order(20);
  const FormalSeries lhs = bracket_side(part, o), rhs = closed_form(part, o);
  ctx.symbolic(label("part ", part), lhs, rhs, o);
  cross_eval(ctx, "eta quotient", lhs, rhs);
}

void relations(CheckContext& ctx) {
  const QExp o = ctx.order(20);
  const HalfInt h = half();
  auto g = [&](int i, long p) { return g_series(GFamilyIndex(i, h, p, h), o); };
  ctx.symbolic("g1[1] = g1[0]", g(1, 1), g(1, 0), o);
  ctx.symbolic("g2[1] = -g2[0]", g(2, 1), g(2, 0).scaled(GaussRat(-1)), o);
  for (int n = 1; n <= 3; ++n) {
    const FormalSeries gt = gtilde_series(n, o), cf = gtilde_closed(n, o);
    ctx.symbolic(label("gtilde", n, " = bracket"), gt, gtilde_display(n, o), o);
    ctx.symbolic(label("gtilde", n, " = eta quotient"), gt, cf, o);
    cross_eval(ctx, label("gtilde", n), gt, cf);
  }
}

void theta_eta(CheckContext& ctx, int part) {
  const QExp o = ctx.order(20);
  const FormalSeries th = theta_nullwert_series(half(), one, part == 1 ? Sign::plus : Sign::minus, o);
  const FormalSeries et = part == 1 ? eta_d(o) : eta_b(o);
  ctx.symbolic(part == 1 ? "theta" : "theta(-)", th, et, o);
  cross_eval(ctx, "theta", th, et);
}

}  // namespace

void add_exact(std::vector<CheckInfo>& reg) {
  const char* p91[] = {
      "sum over 0<r<=j minus j<r<=0 of (-1)^j q^{(j+1/4)^2 - r^2/2} = (eta^4/(eta(tau/2) eta(2tau)) - eta(tau/2) "
      "eta(2tau)/eta)/2",
      "sum over 0<r<=j minus j<r<=0 of (-1)^r q^{(j+1/4)^2 - r^2/2} = (eta eta(tau/2) - eta^2/eta(tau/2))/2",
      "sum over 0<r<=j minus j<r<=0 of (-1)^j q^{(j+1/2)^2 - (r+1/2)^2/2} = eta(tau) eta(2tau)"};
  for (int part = 1; part <= 3; ++part) {
    reg.push_back({label("ex9.P9.1.", part), CheckKind::symbolic, p91[part - 1], "order 20", 0,
                   [part](CheckContext& c) { eta_identity(c, part); }});
  }
  reg.push_back({"ex9.relations", CheckKind::symbolic,
                 "g^{(1)[1/2,1]}_{1/2} = g^{(1)[1/2,0]}_{1/2}, g^{(2)[1/2,1]}_{1/2} = -g^{(2)[1/2,0]}_{1/2}; tilde g_1 "
                 "= bracket + theta^{(-)}_{1/2,1}/2 = eta^4/(2 eta(tau/2) eta(2tau)), tilde g_2 = bracket + theta_{1/2,1}/2 "
                 "= eta eta(tau/2)/2, sqrt2 tilde g_3 = bracket = eta eta(2tau)",
                 "order 20", 0, relations});
  reg.push_back({"ex9.thetaeta.1", CheckKind::symbolic, "theta_{1/2,1}(tau,0) = eta(tau)^2/eta(tau/2)", "order 20", 0,
                 [](CheckContext& c) { theta_eta(c, 1); }});
  reg.push_back({"ex9.thetaeta.2", CheckKind::symbolic, "theta^{(-)}_{1/2,1}(tau,0) = eta(tau/2) eta(2tau)/eta(tau)",
                 "order 20", 0, [](CheckContext& c) { theta_eta(c, 2); }});
}

}  // namespace mocktheta::checks
