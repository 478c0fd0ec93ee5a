#include "checks.hpp"

namespace mocktheta::checks {

namespace {

const cplx t_generic{0.17, 0.05};

std::vector<HalfInt> phi_ms(const CheckContext& ctx) { return ctx.halfints("m", {hf(1), hf(2), hf(3)}); }
std::vector<HalfInt> phi_ss(const CheckContext& ctx) { return ctx.halfints("s", {hf(0), hf(1)}); }

std::string tag(Sign sg, const HalfInt& m, const HalfInt& s) {
  return label(sgn_name(sg), " m=", m.str(), " s=", s.str());
}

void exchange(CheckContext& ctx) {
  const auto& np = ctx.numeric();
  for (const auto& pt0 : ctx.points(generic_points())) {
    const EvalPoint pt(pt0.tau, pt0.z1, pt0.z2, t_generic);
    const EvalPoint sw(pt.tau, -pt.z2, -pt.z1, pt.t);
    const EvalPoint anti(pt.tau, pt.z1, -pt.z1, pt.t);
    for (Sign sg : {Sign::plus, Sign::minus}) {
      for (const auto& m : phi_ms(ctx)) {
        for (const auto& s : phi_ss(ctx)) {
          const std::string t = tag(sg, m, s) + at2(pt);
          ctx.numeric("(1) i=1" + t, phi_num(sg, m, s, PhiPart::one, sw, np), phi_num(sg, m, s, PhiPart::two, pt, np));
          ctx.numeric("(1) i=2" + t, phi_num(sg, m, s, PhiPart::two, sw, np), phi_num(sg, m, s, PhiPart::one, pt, np));
          ctx.numeric("(2)" + t, phi_num(sg, m, s, PhiPart::full, sw, np), -phi_num(sg, m, s, PhiPart::full, pt, np));
          ctx.numeric("(3)" + t, phi_num(sg, m, s, PhiPart::full, anti, np), 0.0);
        }
      }
    }
  }
}

void modified(CheckContext& ctx) {
  const auto& np = ctx.numeric();
  const auto ms = phi_ms(ctx);
  for (const auto& pt0 : ctx.points(generic_points())) {
    const EvalPoint pt(pt0.tau, pt0.z1, pt0.z2, t_generic);
    const EvalPoint pt1(pt.tau + 1.0, pt.z1, pt.z2, pt.t);
    for (Sign sg : {Sign::plus, Sign::minus}) {
      for (const auto& m : ms) {
        for (PhiPart part : {PhiPart::one, PhiPart::two}) {
          const int pj = part == PhiPart::one ? 1 : 2;
          for (const auto& s : phi_ss(ctx)) {
            const cplx base = phi_tilde_num(sg, m, s, part, pt, np);
            for (long d : {-1, 1}) {
              const HalfInt s2 = s + HalfInt(d);
              ctx.numeric(label("(1) j=", pj, " ", tag(sg, m, s), " s'=", s2.str(), at2(pt)), base,
                          phi_tilde_num(sg, m, s2, part, pt, np));
            }
            if ((m + s).is_integer())
              ctx.numeric(label("(3) j=", pj, " ", tag(sg, m, s), at2(pt)), phi_tilde_num(sg, m, s, part, pt1, np), base);
          }
        }
      }
    }
  }
  for (const auto& pt0 : ctx.points(s_law_points())) {
    const EvalPoint pt(pt0.tau, pt0.z1, pt0.z2, t_generic);
    const cplx tau = pt.tau;
    const EvalPoint sp(-1.0 / tau, pt.z1 / tau, pt.z2 / tau, pt.t);
    for (const auto& m : ms) {
      for (PhiPart part : {PhiPart::one, PhiPart::two}) {
        const cplx lhs = phi_tilde_num(Sign::minus, m, half(), part, sp, np);
        const cplx rhs = tau * std::exp(2.0 * pi * I * m.to_double() * pt.z1 * pt.z2 / tau) *
                         phi_tilde_num(Sign::minus, m, half(), part, pt, np);
        ctx.numeric(label("(2) j=", part == PhiPart::one ? 1 : 2, " m=", m.str(), at2(pt)), lhs, rhs);
      }
    }
  }
}

void translation(CheckContext& ctx) {
  const auto& np = ctx.numeric();
  for (const auto& pt0 : ctx.points(generic_points())) {
    const EvalPoint pt(pt0.tau, pt0.z1, pt0.z2, t_generic);
    for (Sign sg : {Sign::plus, Sign::minus}) {
      for (const auto& m : phi_ms(ctx)) {
        for (const auto& s : phi_ss(ctx)) {
          for (long p : ctx.ints("p", {-1, 1, 2})) {
            const EvalPoint sh(pt.tau, pt.z1, pt.z2 + double(p) * pt.tau, pt.t);
            const HalfInt s2 = HalfInt::from_rational(s.value() + m.value() * p);
            const cplx ph = std::exp(-2.0 * pi * I * m.to_double() * double(p) * pt.z1);
            const std::string t = label(tag(sg, m, s), " p=", p, at2(pt));
            ctx.numeric("(i)" + t, phi_num(sg, m, s, PhiPart::one, sh, np), ph * phi_num(sg, m, s2, PhiPart::one, pt, np));
            ctx.numeric("(ii)" + t, phi_num(sg, m, s, PhiPart::two, sh, np),
                        double(sign_pow(sg, p)) * ph * phi_num(sg, m, s2, PhiPart::two, pt, np));
            if (sign_pow(sg, p) == 1)
              ctx.numeric("(2)" + t, phi_num(sg, m, s, PhiPart::full, sh, np), ph * phi_num(sg, m, s2, PhiPart::full, pt, np));
          }
        }
      }
    }
  }
}

void diagonal_shift(CheckContext& ctx) {
  const auto& np = ctx.numeric();
  for (const auto& pt0 : ctx.points(generic_points())) {
    const EvalPoint pt(pt0.tau, pt0.z1, pt0.z2, t_generic);
    for (Sign sg : {Sign::plus, Sign::minus}) {
      for (const auto& m : phi_ms(ctx)) {
        for (const auto& s : phi_ss(ctx)) {
          for (long a : ctx.ints("a", {-1, 1, 2})) {
            const double ad = double(a), md = m.to_double();
            const EvalPoint sh(pt.tau, pt.z1 + ad * pt.tau, pt.z2 - ad * pt.tau, pt.t);
            const HalfInt s2 = s - m.times(2 * a);
            const cplx f = double(sign_pow(sg, a)) * std::exp(2.0 * pi * I * md * ad * (pt.z1 - pt.z2)) * qpow(pt.tau, md * ad * ad);
            const std::string t = label(tag(sg, m, s), " a=", a, at2(pt));
            for (PhiPart part : {PhiPart::one, PhiPart::two, PhiPart::full})
              ctx.numeric(label("part ", int(part) + 1, t), phi_num(sg, m, s, part, sh, np), f * phi_num(sg, m, s2, part, pt, np));
          }
        }
      }
    }
  }
}

void diagonal_shift_theta(CheckContext& ctx) {
  const auto& np = ctx.numeric();
  double printed = 0;
  for (const auto& pt : ctx.points(generic_points())) {
    const cplx tau = pt.tau, zd = pt.z1 - pt.z2, zs = pt.z1 + pt.z2;
    for (Sign sg : {Sign::plus, Sign::minus}) {
      for (const auto& m : phi_ms(ctx)) {
        for (const auto& s : phi_ss(ctx)) {
          for (long a : ctx.ints("a", {0, 1, 2})) {
            if (a < 0) throw ParamDomain("a must be non-negative here");
            const double ad = double(a), md = m.to_double();
            const EvalPoint sh(tau, pt.z1 + ad * tau, pt.z2 - ad * tau);
            const cplx f = double(sign_pow(sg, a)) * std::exp(2.0 * pi * I * md * ad * zd) * qpow(tau, md * ad * ad);
            cplx c1 = 0, c2 = 0;
            for (long k = 1; QExp(k) <= m.value() * 2 * a; ++k) {
              const HalfInt ks = HalfInt(k) - s;
              const double x = ks.to_double();
              const cplx w = std::exp(-pi * I * x * zd) * qpow(tau, -x * x / (4 * md));
              c1 += w * theta_num(sg, ks, m, tau, zs, np);
              c2 += w * theta_num(sg, -ks, m, tau, zs, np);
            }
            const std::string t = label(tag(sg, m, s), " a=", a, at2(pt));
            const cplx p1 = phi_num(sg, m, s, PhiPart::one, pt, np), p2 = phi_num(sg, m, s, PhiPart::two, pt, np);
            ctx.numeric("(1)" + t, phi_num(sg, m, s, PhiPart::full, sh, np), f * (p1 - p2 - (c1 - c2)));
            // each part alone picks up +theta_{-(k-s)} resp. +theta_{k-s}
            const cplx l1 = phi_num(sg, m, s, PhiPart::one, sh, np), l2 = phi_num(sg, m, s, PhiPart::two, sh, np);
            ctx.numeric("(2)(i)" + t, l1, f * (p1 + c2));
            ctx.numeric("(2)(ii)" + t, l2, f * (p2 + c1));
            printed = std::max({printed, relative_residual(l1, f * (p1 - c1)), relative_residual(l2, f * (p2 - c2))});
          }
        }
      }
    }
  }
  ctx.note(label("parts (2)(i),(ii) with -theta_{k-s} resp. -theta_{-(k-s)} give worst residual ", printed));
}

void vanishing(CheckContext& ctx) {
  const auto& np = ctx.numeric();
  for (const auto& pt0 : ctx.points(generic_points())) {
    for (const auto& m : phi_ms(ctx)) {
      for (const auto& s : phi_ss(ctx)) {
        for (long p : ctx.ints("p", {-1, 0, 1, 2})) {
          const EvalPoint a(pt0.tau, pt0.z1, -pt0.z1 + double(p) * pt0.tau, t_generic);
          const EvalPoint b(pt0.tau, pt0.z1, -pt0.z1 + 2.0 * double(p) * pt0.tau, t_generic);
          const std::string t = label(" m=", m.str(), " s=", s.str(), " p=", p, at(pt0));
          ctx.numeric("(i)" + t, phi_num(Sign::plus, m, s, PhiPart::one, a, np), phi_num(Sign::plus, m, s, PhiPart::two, a, np));
          ctx.numeric("(ii)" + t, phi_num(Sign::minus, m, s, PhiPart::one, b, np), phi_num(Sign::minus, m, s, PhiPart::two, b, np));
        }
      }
    }
  }
}

}  // namespace

void add_phi(std::vector<CheckInfo>& reg) {
  const std::string sweep = "sign +/-, m in {1/2,1,3/2}, s in {0,1/2}, t=0.17+0.05i, generic points";
  reg.push_back({"phi.N2.1", CheckKind::numeric,
                 "exchange symmetry Phi_i(tau,-z2,-z1,t) = Phi_j(tau,z1,z2,t), Phi(tau,-z2,-z1,t) = -Phi(tau,z1,z2,t), "
                 "Phi(tau,z,-z,t) = 0",
                 sweep, 1e-9, exchange});
  reg.push_back({"phi.L2.2", CheckKind::numeric,
                 "modified Phi~_j: independence of s mod Z; S-law Phi~^{(-)[m,1/2]}_j(-1/tau,z1/tau,z2/tau,t) = "
                 "tau e^{2 pi i m z1 z2/tau} Phi~_j(tau,z1,z2,t); T-invariance when m+s in Z",
                 sweep + "; S-law at tau in {i, 0.2+i}", 1e-7, modified});
  reg.push_back({"phi.L2.3", CheckKind::numeric,
                 "z2 -> z2 + p tau: Phi_1 = e^{-2 pi i m p z1} Phi_1^{[m,s+mp]}, Phi_2 = (+/-1)^p e^{-2 pi i m p z1} "
                 "Phi_2^{[m,s+mp]}",
                 sweep + ", p in {-1,1,2}", 1e-8, translation});
  reg.push_back({"phi.L2.5", CheckKind::numeric,
                 "(z1+a tau, z2-a tau): Phi = (+/-1)^a e^{2 pi i m a (z1-z2)} q^{ma^2} Phi^{[m,s-2am]} for parts 1, 2 and full",
                 sweep + ", a in {-1,1,2}", 1e-8, diagonal_shift});
  reg.push_back({"phi.L2.6", CheckKind::numeric,
                 "(z1+a tau, z2-a tau) at fixed s: Phi picks up the finite theta sum over 1 <= k <= 2am",
                 "sign +/-, m in {1/2,1,3/2}, s in {0,1/2}, a in {0,1,2}, t=0, generic points", 1e-8,
                 diagonal_shift_theta});
  reg.push_back({"phi.L2.7", CheckKind::numeric,
                 "vanishing: Phi^{(+)}(tau,z,-z+p tau,t) = 0 and Phi^{(-)}(tau,z,-z+2p tau,t) = 0, as Phi_1 = Phi_2",
                 "m in {1/2,1,3/2}, s in {0,1/2}, p in {-1,0,1,2}, generic points", 1e-8, vanishing});
}

}  // namespace mocktheta::checks
