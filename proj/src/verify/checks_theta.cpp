#include "checks.hpp"

namespace mocktheta::checks {

namespace {

const std::vector<HalfInt>& theta_ms() {
  static const std::vector<HalfInt> v{hf(1), hf(2), hf(3)};
  return v;
}
const std::vector<HalfInt>& theta_js() {
  static const std::vector<HalfInt> v{hf(0), hf(1), hf(2)};
  return v;
}

void quasi_periodicity(CheckContext& ctx) {
  const auto& np = ctx.numeric();
  auto as = ctx.halfints("a", {hf(-2), hf(1), hf(2), hf(3), hf(4)});
  for (const auto& pt : ctx.points(generic_points())) {
    for (Sign sg : {Sign::plus, Sign::minus}) {
      for (const auto& m : ctx.halfints("m", theta_ms())) {
        for (const auto& j : ctx.halfints("j", theta_js())) {
          for (const auto& a : as) {
            const QExp am = a * m;
            if (QExp(am * 2).get_den() != 1) continue;
            const double ad = a.to_double(), md = m.to_double();
            const cplx tau = pt.tau, z = pt.z();
            const HalfInt shifted = HalfInt::from_rational(j.value() + am);
            const std::string tag = label(sgn_name(sg), " m=", m.str(), " j=", j.str(), " a=", a.str(), at(pt));
            ctx.numeric("tau-shift" + tag, theta_num(sg, j, m, tau, z + ad * tau, np),
                        qpow(tau, -md * ad * ad / 4) * std::exp(-pi * I * md * ad * z) * theta_num(sg, shifted, m, tau, z, np));
            const Sign other = am.get_den() == 1 ? sg : flip(sg);
            ctx.numeric("unit-shift" + tag, theta_num(sg, j, m, tau, z + ad, np),
                        epi(j.to_double() * ad) * theta_num(other, j, m, tau, z, np));
          }
        }
      }
    }
  }
}

void index_shift(CheckContext& ctx) {
  const auto& np = ctx.numeric();
  for (const auto& pt : ctx.points(generic_points())) {
    for (Sign sg : {Sign::plus, Sign::minus}) {
      for (const auto& m : ctx.halfints("m", theta_ms())) {
        for (const auto& j : ctx.halfints("j", theta_js())) {
          for (long a : ctx.ints("a", {-2, -1, 1, 2})) {
            const HalfInt shifted = j + m.times(2 * a);
            ctx.numeric(label(sgn_name(sg), " m=", m.str(), " j=", j.str(), " a=", a, at(pt)),
                        theta_num(sg, shifted, m, pt.tau, pt.z(), np),
                        double(sign_pow(sg, a)) * theta_num(sg, j, m, pt.tau, pt.z(), np));
          }
        }
      }
    }
  }
}

void s_law(CheckContext& ctx) {
  const auto& np = ctx.numeric();
  double printed = 0;
  for (const auto& pt : ctx.points(generic_points())) {
    const cplx tau = pt.tau, z = pt.z();
    for (const auto& m : ctx.halfints("m", theta_ms())) {
      const double md = m.to_double();
      const cplx pre = sqrt_minus_i_tau(tau) / std::sqrt(2 * md) * std::exp(pi * I * md * z * z / (2.0 * tau));
      for (const auto& j : ctx.halfints("j", theta_js())) {
        const Sign inner = j.is_integer() ? Sign::plus : Sign::minus;
        for (Sign sg : {Sign::plus, Sign::minus}) {
          cplx sum = 0, sum_printed = 0;
          // + : integer k in [0, 2m);  - : half-odd k in (0, 2m)
          for (long tk = (sg == Sign::plus ? 0 : 1); tk < 2 * m.twice_long(); tk += 2) {
            const HalfInt k = hf(tk);
            const cplx th = theta_num(inner, k, m, tau, z, np);
            const double jk = j.to_double() * k.to_double() / md;
            sum += epi(-jk) * th;
            sum_printed += epi(jk) * th;
          }
          const cplx lhs = theta_num(sg, j, m, -1.0 / tau, z / tau, np);
          ctx.numeric(label(sgn_name(sg), " m=", m.str(), " j=", j.str(), at(pt)), lhs, pre * sum);
          printed = std::max(printed, relative_residual(lhs, pre * sum_printed));
        }
      }
    }
  }
  ctx.note(label("phase e^{-pi i jk/m}; with e^{+pi i jk/m} the worst residual is ", printed));
}

void t_law(CheckContext& ctx) {
  const auto& np = ctx.numeric();
  for (const auto& pt : ctx.points(generic_points())) {
    for (Sign sg : {Sign::plus, Sign::minus}) {
      for (const auto& m : ctx.halfints("m", theta_ms())) {
        for (const auto& j : ctx.halfints("j", theta_js())) {
          const Sign other = (m + j).is_integer() ? sg : flip(sg);
          const double jd = j.to_double();
          ctx.numeric(label(sgn_name(sg), " m=", m.str(), " j=", j.str(), at(pt)),
                      theta_num(sg, j, m, pt.tau + 1.0, pt.z(), np),
                      epi(jd * jd / (2 * m.to_double())) * theta_num(other, j, m, pt.tau, pt.z(), np));
        }
      }
    }
  }
}

void mumford(CheckContext& ctx) {
  const auto& np = ctx.numeric();
  for (const auto& pt : ctx.points(generic_points())) {
    const cplx tau = pt.tau, z2 = 2.0 * pt.z();
    ctx.numeric("00" + at(pt), mumford_theta(0, tau, pt.z(), np), theta_num(Sign::plus, 0, half(), tau, z2, np));
    ctx.numeric("01" + at(pt), mumford_theta(1, tau, pt.z(), np), theta_num(Sign::minus, 0, half(), tau, z2, np));
    ctx.numeric("10" + at(pt), mumford_theta(10, tau, pt.z(), np), theta_num(Sign::plus, half(), half(), tau, z2, np));
    ctx.numeric("11" + at(pt), mumford_theta(11, tau, pt.z(), np),
                I * theta_num(Sign::minus, half(), half(), tau, z2, np));
  }
}

}  // namespace

void add_theta(std::vector<CheckInfo>& reg) {
  const std::string sweep = "sign +/-, m in {1/2,1,3/2}, j in {0,1/2,1}, generic points";
  reg.push_back({"theta.L1.1", CheckKind::numeric,
                 "theta quasi-periodicity: theta_{j,m}(tau,z+a tau) = q^{-ma^2/4} e^{-pi i m a z} theta_{j+am,m}(tau,z); "
                 "theta_{j,m}(tau,z+a) = e^{pi i j a} theta^{(+/-)} or theta^{(-/+)} as am is integral or not",
                 sweep + ", a in {-1,1/2,1,3/2,2} with am in Z/2", 1e-9, quasi_periodicity});
  reg.push_back({"theta.L1.2", CheckKind::numeric, "index shift: theta_{j+2am,m} = (+/-1)^a theta_{j,m}, a in Z",
                 sweep + ", a in {-2,-1,1,2}", 1e-9, index_shift});
  reg.push_back({"theta.L1.3", CheckKind::numeric,
                 "S-transformation: theta_{j,m}(-1/tau,z/tau) = (-i tau)^{1/2}/sqrt(2m) e^{pi i m z^2/2tau} "
                 "sum_k e^{-pi i jk/m} theta_{k,m}(tau,z), k integral for theta^(+) and half-odd for theta^(-)",
                 sweep, 1e-9, s_law});
  reg.push_back({"theta.L1.4", CheckKind::numeric,
                 "T-transformation: theta_{j,m}(tau+1,z) = e^{pi i j^2/2m} theta^{(+/-)} if m+j in Z, theta^{(-/+)} otherwise",
                 sweep, 1e-9, t_law});
  reg.push_back({"mumford.N1.1", CheckKind::numeric,
                 "Mumford dictionary: vartheta_00, vartheta_01, vartheta_10, vartheta_11 = i theta^{(-)}_{1/2,1/2}(tau,2z)",
                 "generic points", 1e-9, mumford});
}

}  // namespace mocktheta::checks
