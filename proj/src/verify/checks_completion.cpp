#include "checks.hpp"

namespace mocktheta::checks {

namespace {

cplx phi_add_at(int part, const HalfInt& m, cplx tau, cplx z, const NumericParams& np) {
  switch (part) {
    case 1:
      return phi_add_num(Sign::minus, m, half(), PhiPart::full,
                         EvalPoint(tau, z / 2.0 + tau / 2.0 - 0.5, z / 2.0 - tau / 2.0 + 0.5), np, QExp(1, 2));
    case 2:
      return phi_add_num(Sign::minus, m, half(), PhiPart::full, EvalPoint(tau, z / 2.0 + tau / 2.0, z / 2.0 - tau / 2.0),
                         np, QExp(1, 2));
    default:
      return phi_add_num(Sign::minus, m, half(), PhiPart::full, EvalPoint(tau, z / 2.0 - 0.5, z / 2.0 + 0.5), np, QExp(0));
  }
}

void add_values(CheckContext& ctx, int part) {
  const auto& np = ctx.numeric();
  for (const auto& pt : ctx.points(generic_points())) {
    for (const auto& m : ctx.odd_half_m()) {
      ctx.numeric(label("m=", m.str(), at(pt)), phi_add_at(part, m, pt.tau, pt.z(), np),
                  add_corrections(part, m, pt.tau, pt.z(), np));
    }
  }
}

void tilde_decomposition(CheckContext& ctx, int part) {
  const auto& np = ctx.numeric();
  const QExp order = ctx.order(40);
  for (const auto& m : ctx.odd_half_m()) {
    for (long p : ctx.ints("p", {0, 1})) {
      if (p < 0) throw ParamDomain("p must be non-negative");
      const auto coef = decomposition_coefficients(part, m, p, order);
      for (const auto& pt : ctx.points(generic_points())) {
        const cplx psi = psi_num(part, m, pt.tau, pt.z(), np);
        ctx.numeric(label("m=", m.str(), " p=", p, at(pt)), decomposition_prefactor(part, m, p, pt.tau) * psi,
                    decomposition_rhs(part, m, p, pt.tau, pt.z(), coef, np));
      }
    }
  }
}

void psi_s(CheckContext& ctx) {
  const auto& np = ctx.numeric();
  for (const auto& pt : ctx.points(s_law_points())) {
    const cplx tau = pt.tau, z = pt.z();
    const cplx st = -1.0 / tau, sz = z / tau;
    for (const auto& m : ctx.odd_half_m()) {
      const double md = m.to_double();
      const cplx gz = std::exp(pi * I * md * z * z / (2.0 * tau));
      const cplx g1 = std::exp(-pi * I * md / (2.0 * tau));
      const std::string tg = label(" m=", m.str(), at(pt));
      ctx.numeric("(i)" + tg, psi_num(1, m, st, sz, np),
                  -tau * epi(md) * gz * g1 * qpow(tau, -md / 4) * psi_num(1, m, tau, z, np));
      ctx.numeric("(ii)" + tg, psi_num(2, m, st, sz, np), tau * gz * g1 * psi_num(3, m, tau, z, np));
      ctx.numeric("(iii)" + tg, psi_num(3, m, st, sz, np), -tau * gz * qpow(tau, -md / 4) * psi_num(2, m, tau, z, np));
    }
  }
}

void psi_t(CheckContext& ctx) {
  const auto& np = ctx.numeric();
  for (const auto& pt : ctx.points(generic_points())) {
    const cplx tau = pt.tau, z = pt.z(), t1 = tau + 1.0;
    for (const auto& m : ctx.odd_half_m()) {
      const std::string tg = label(" m=", m.str(), at(pt));
      const cplx p1 = psi_num(1, m, tau, z, np), p2 = psi_num(2, m, tau, z, np), p3 = psi_num(3, m, tau, z, np);
      ctx.numeric("(i)" + tg, psi_num(1, m, t1, z, np), p2);
      ctx.numeric("(ii)" + tg, psi_num(2, m, t1, z, np), -p1);
      ctx.numeric("(iii)" + tg, psi_num(3, m, t1, z, np), p3);
      // the alternative representations of psi^(1) and psi^(3)
      ctx.numeric("def1" + tg,
                  -phi_tilde_num(Sign::minus, m, half(), PhiPart::full,
                                 EvalPoint(tau, z / 2.0 + tau / 2.0 + 0.5, z / 2.0 - tau / 2.0 - 0.5), np, QExp(1, 2)),
                  p1);
      ctx.numeric("def3" + tg,
                  -phi_tilde_num(Sign::minus, m, half(), PhiPart::full, EvalPoint(tau, z / 2.0 + 0.5, z / 2.0 - 0.5),
                                 np, QExp(0)),
                  p3);
    }
  }
}

void nullwert_s(CheckContext& ctx) {
  const auto& np = ctx.numeric();
  for (const auto& pt : ctx.points(s_law_points())) {
    const cplx tau = pt.tau, st = -1.0 / tau;
    for (const auto& m : ctx.odd_half_m()) {
      const double md = m.to_double();
      const HalfInt mh = m + half();
      const cplx pre = sqrt_minus_i_tau(tau) / std::sqrt(2 * md + 1);
      const long top = m.twice_long();
      for (long p : ctx.ints("p", p_values(m))) {
        if (p < 0) throw ParamDomain("p must be non-negative");
        const double pd = double(p);
        cplx s1 = 0, s2 = 0, s3 = 0;
        for (long l = 0; l <= top; ++l) {
          const double ld = double(l);
          s1 += e(-2 * md * md * (2 * pd + 1) * ld / (2 * md + 1)) * theta_num(Sign::minus, m.times(2 * l), mh, tau, 0.0, np);
          s2 += e(-md * md * (2 * pd + 1) * (2 * ld + 1) / (2 * md + 1)) *
                theta_num(Sign::minus, m.times(2 * l + 1), mh, tau, 0.0, np);
          s3 += e(-2 * md * md * pd * (2 * ld + 1) / (2 * md + 1)) *
                theta_num(Sign::plus, m.times(2 * l + 1), mh, tau, 0.0, np);
        }
        const std::string tg = label(" m=", m.str(), " p=", p, at(pt));
        ctx.numeric("1)" + tg, theta_num(Sign::plus, m.times(2 * p + 1), mh, st, 0.0, np), pre * s1);
        ctx.numeric("2)" + tg, theta_num(Sign::minus, m.times(2 * p + 1), mh, st, 0.0, np), pre * s2);
        ctx.numeric("3)" + tg, theta_num(Sign::minus, m.times(2 * p), mh, st, 0.0, np), pre * s3);
      }
    }
  }
}

using FamilyFn = cplx (*)(int, const HalfInt&, long, cplx, cplx, const NumericParams&);

// S-law shared by Xi, Upsilon and G: family i maps to partner family with the given phases.
void s_family(CheckContext& ctx, FamilyFn f, const char* name) {
  const auto& np = ctx.numeric();
  for (const auto& pt : ctx.points(s_law_points())) {
    const cplx tau = pt.tau, z = pt.z();
    for (const auto& m : ctx.odd_half_m()) {
      const double md = m.to_double();
      const long top = m.twice_long();
      const cplx sq = sqrt_minus_i_tau(tau);
      const cplx pre = sq * sq * sq / std::sqrt(2 * md + 1) * std::exp(pi * I * md * z * z / (2.0 * tau));
      std::map<std::pair<int, long>, cplx> at_tau;
      auto val = [&](int i, long l) {
        auto key = std::make_pair(i, l);
        auto it = at_tau.find(key);
        if (it != at_tau.end()) return it->second;
        return at_tau[key] = f(i, m, l, tau, z, np);
      };
      for (long p : ctx.ints("p", p_values(m))) {
        const double pd = double(p);
        cplx r1 = 0, r2 = 0, r3 = 0;
        for (long l = 0; l <= top; ++l) {
          const double ld = double(l);
          r1 += epi(-(2 * pd + 1) * (2 * ld + 1) / (2 * (2 * md + 1))) * val(1, l);
          r2 += epi(-(2 * pd + 1) * ld / (2 * md + 1)) * val(3, l);
          r3 += epi(-pd * (2 * ld + 1) / (2 * md + 1)) * val(2, l);
        }
        const std::string tg = label(" m=", m.str(), " p=", p, at(pt));
        ctx.numeric(label(name, "1", tg), f(1, m, p, -1.0 / tau, z / tau, np), pre * r1);
        ctx.numeric(label(name, "2", tg), f(2, m, p, -1.0 / tau, z / tau, np), I * pre * r2);
        ctx.numeric(label(name, "3", tg), f(3, m, p, -1.0 / tau, z / tau, np), -I * pre * r3);
      }
    }
  }
}

void t_family(CheckContext& ctx, FamilyFn f, const char* name) {
  const auto& np = ctx.numeric();
  for (const auto& pt : ctx.points(generic_points())) {
    const cplx tau = pt.tau, z = pt.z();
    for (const auto& m : ctx.odd_half_m()) {
      const double md = m.to_double();
      for (long p : ctx.ints("p", p_values(m))) {
        const double pd = double(p);
        const cplx ph = epi((2 * pd + 1) * (2 * pd + 1) / (4 * (2 * md + 1)) - 0.25);
        const std::string tg = label(" m=", m.str(), " p=", p, at(pt));
        ctx.numeric(label(name, "1", tg), f(1, m, p, tau + 1.0, z, np), ph * f(2, m, p, tau, z, np));
        ctx.numeric(label(name, "2", tg), f(2, m, p, tau + 1.0, z, np), -ph * f(1, m, p, tau, z, np));
        ctx.numeric(label(name, "3", tg), f(3, m, p, tau + 1.0, z, np),
                    epi(pd * pd / (2 * md + 1)) * f(3, m, p, tau, z, np));
      }
    }
  }
}

cplx xi_f(int i, const HalfInt& m, long p, cplx tau, cplx z, const NumericParams& np) { return xi_num(i, m, p, tau, z, np); }
cplx ups_f(int i, const HalfInt& m, long p, cplx tau, cplx z, const NumericParams& np) {
  return upsilon_num(i, m, p, tau, z, np);
}
cplx g_f(int i, const HalfInt& m, long p, cplx tau, cplx z, const NumericParams& np) { return G_num(i, m, p, tau, z, np); }

void g_expansion(CheckContext& ctx) {
  const auto& np = ctx.numeric();
  const QExp order = ctx.order(30);
  for (const auto& m : ctx.odd_half_m()) {
    const auto ks = odd_half_range(m);
    for (int i : ctx.ints("i", {1, 2, 3})) {
      for (long p : ctx.ints("p", p_values(m))) {
        std::vector<FormalSeries> gs;
        for (const auto& k : ks) gs.push_back(g_series(GFamilyIndex(i, m, p, k), order));
        for (const auto& pt : ctx.points(generic_points())) {
          cplx rhs = 0;
          for (std::size_t n = 0; n < ks.size(); ++n)
            rhs += series_eval(gs[n], pt.tau).value * theta_diff(Sign::minus, ks[n], m, pt.tau, pt.z(), np);
          ctx.numeric(label("i=", i, " m=", m.str(), " p=", p, at(pt)), G_num(i, m, p, pt.tau, pt.z(), np), rhs);
        }
      }
    }
  }
}

}  // namespace

void add_completion(std::vector<CheckInfo>& reg) {
  const char* add_cite[] = {
      "Phi_add^{(-)[m,1/2]}(tau, z/2+tau/2-1/2, z/2-tau/2+1/2, 0) = sum_{k<m} e^{pi i k} q^{-k(k-2m)/4m} [theta_k - "
      "theta_{-k}] + e^{pi i m} q^{m/4} theta^{(-)}_{m,m}",
      "Phi_add^{(-)[m,1/2]}(tau, z/2+tau/2, z/2-tau/2, 0) = -sum_{k<m} q^{-k(k-2m)/4m} [theta_k - theta_{-k}] - q^{m/4} "
      "theta^{(-)}_{m,m}",
      "Phi_add^{(-)[m,1/2]}(tau, z/2-1/2, z/2+1/2, 0) = 0"};
  const char* tilde_cite[] = {
      "the modified function: q^{-m/4} theta^{(-)}_{(2p+1)m,m+1/2}(tau,0) tilde Phi at (z/2+tau/2-1/2, z/2-tau/2+1/2) "
      "equals the eta^3 term plus bracket sums and finite theta sums",
      "the modified function: q^{-m/4} theta_{(2p+1)m,m+1/2}(tau,0) tilde Phi at (z/2+tau/2, z/2-tau/2) equals the "
      "eta^3 term plus bracket sums and finite theta sums",
      "the modified function: theta^{(-)}_{2pm,m+1/2}(tau,0) tilde Phi at (z/2-1/2, z/2+1/2) equals the eta^3 term "
      "plus bracket sums and finite theta sums"};
  for (int part = 1; part <= 3; ++part) {
    reg.push_back({label("add.P5.1.", part), CheckKind::numeric, add_cite[part - 1],
                   "m in {1/2,3/2}, generic points", 1e-6, [part](CheckContext& c) { add_values(c, part); }});
    reg.push_back({label("tilde.T5.1.", part), CheckKind::numeric, tilde_cite[part - 1],
                   "m in {1/2,3/2}, p in {0,1}, generic points", 1e-6,
                   [part](CheckContext& c) { tilde_decomposition(c, part); }});
  }
  reg.push_back({"psi.L6.1.S", CheckKind::numeric,
                 "psi^(1)(-1/tau,z/tau) = -tau e^{pi i m} e^{pi i m z^2/2tau} e^{-pi i m/2tau} q^{-m/4} psi^(1); psi^(2) -> "
                 "psi^(3); psi^(3) -> psi^(2)",
                 "m in {1/2,3/2}, tau in {i, 0.2+i}", 1e-7, psi_s});
  reg.push_back({"psi.L6.1.T", CheckKind::numeric,
                 "psi^(1)(tau+1) = psi^(2), psi^(2)(tau+1) = -psi^(1), psi^(3)(tau+1) = psi^(3); with the alternative "
                 "definitions of psi^(1) and psi^(3)",
                 "m in {1/2,3/2}, generic points", 1e-7, psi_t});
  reg.push_back({"xiups.N7.1", CheckKind::numeric,
                 "theta nullwerte of index m+1/2 at -1/tau: (-i tau)^{1/2}/sqrt(2m+1) sum_{l=0}^{2m} phases times "
                 "theta_{2lm} or theta_{(2l+1)m}",
                 "m in {1/2,3/2}, 0 <= p <= 2m, tau in {i, 0.2+i}", 1e-7, nullwert_s});
  reg.push_back({"xiups.L7.1", CheckKind::numeric,
                 "Xi^{(i)[m,p]} and Upsilon^{(i)[m,p]} at (-1/tau, z/tau) as (-i tau)^{3/2}/sqrt(2m+1) e^{pi i m z^2/2tau} "
                 "times phase sums over the partner family",
                 "m in {1/2,3/2}, 0 <= p <= 2m, tau in {i, 0.2+i}", 1e-7, [](CheckContext& c) {
                   s_family(c, xi_f, "Xi");
                   s_family(c, ups_f, "Upsilon");
                 }});
  reg.push_back({"xiups.L7.2", CheckKind::numeric,
                 "Xi^(1)(tau+1) = e^{pi i(2p+1)^2/4(2m+1) - pi i/4} Xi^(2), Xi^(2)(tau+1) = -e^{...} Xi^(1), Xi^(3)(tau+1) "
                 "= e^{pi i p^2/(2m+1)} Xi^(3); same for Upsilon",
                 "m in {1/2,3/2}, 0 <= p <= 2m, generic points", 1e-7, [](CheckContext& c) {
                   t_family(c, xi_f, "Xi");
                   t_family(c, ups_f, "Upsilon");
                 }});
  reg.push_back({"G.P8.1", CheckKind::numeric,
                 "G^{(i)[m,p]} = Xi - Upsilon: S-transformation with (-i tau)^{3/2}/sqrt(2m+1) phase sums, T-transformation "
                 "with e^{pi i(2p+1)^2/4(2m+1) - pi i/4} and e^{pi i p^2/(2m+1)}",
                 "m in {1/2,3/2}, 0 <= p <= 2m; S at tau in {i, 0.2+i}, T at generic points", 1e-6, [](CheckContext& c) {
                   s_family(c, g_f, "S");
                   t_family(c, g_f, "T");
                 }});
  reg.push_back({"G.expand8.1b", CheckKind::numeric,
                 "G^{(i)[m,p]}(tau,z) = sum_{0<k<=m} g^{(i)[m,p]}_k(tau) [theta^{(-)}_{k,m} - theta^{(-)}_{-k,m}](tau,z)",
                 "m in {1/2,3/2}, i in {1,2,3}, 0 <= p <= 2m, order 30, generic points", 1e-6, g_expansion});
}

}  // namespace mocktheta::checks
