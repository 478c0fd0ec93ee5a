#include "checks.hpp"

namespace mocktheta::checks {

namespace {

const QExp kWindow = 24;

std::vector<HalfInt> kernel_ms(const CheckContext& ctx) { return ctx.halfints("m", {hf(1), hf(3)}); }
std::vector<HalfInt> kernel_js(const CheckContext& ctx) { return ctx.halfints("j", {hf(1), hf(3)}); }
std::vector<HalfInt> kernel_as(const CheckContext& ctx) { return ctx.halfints("a", {hf(0), hf(1), hf(2)}); }
std::vector<HalfInt> kernel_bs(const CheckContext& ctx) { return ctx.halfints("b", {hf(0), hf(-1)}); }

// e^{2 pi i x} for exact x, reduced mod 1 first
cplx e_exact(const QExp& x) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return e(QExp(x - fl).get_d());
}

std::vector<double> tau_ims(const CheckContext& ctx) {
  std::vector<double> out;
  for (const auto& pt : ctx.points(generic_points())) {
    const double y = pt.tau.imag();
    if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(y);
  }
  return out;
}

void compare(CheckContext& ctx, const std::string& tag, const Bilateral& lhs, const Bilateral& rhs) {
  Bilateral diff = lhs;
  bilateral_add(diff, rhs, -1.0);
  const double scale = std::max({1.0, bilateral_max_abs(lhs), bilateral_max_abs(rhs)});
  ctx.residual(tag, bilateral_max_abs(diff) / scale);
}

Bilateral terms(Kernel k, Sign sg, const HalfInt& j, const HalfInt& m, const QExp& a, const QExp& b, double y) {
  return kernel_terms(k, sg, j, m, a, b, y, kWindow);
}

// Generic rational arguments for R = P + Q and the index-shift laws.
const std::vector<std::pair<QExp, QExp>>& generic_ab() {
  static const std::vector<std::pair<QExp, QExp>> v{
      {QExp(3, 10), QExp(1, 7)}, {QExp(-1, 4), QExp(2, 5)}, {QExp(7, 10), QExp(-1, 3)}, {QExp(0), QExp(1, 9)}};
  return v;
}

// P carries +E and R carries sgn - E, so R = Q - P; the residual of R = P + Q is reported alongside.
void rpq(CheckContext& ctx) {
  double printed = 0;
  for (double y : tau_ims(ctx)) {
    for (Sign sg : {Sign::plus, Sign::minus}) {
      const double pm = sg == Sign::plus ? 1.0 : -1.0;
      for (const auto& m : kernel_ms(ctx)) {
        for (const auto& j : kernel_js(ctx)) {
          for (const auto& [a, b] : generic_ab()) {
            const std::string tag = label(sgn_name(sg), " m=", m.str(), " j=", j.str(), " a=", to_string(a),
                                          " b=", to_string(b), " Im tau=", y);
            const Bilateral r = terms(Kernel::r, sg, j, m, a, b, y);
            Bilateral qp = terms(Kernel::q, sg, j, m, a, b, y), pq = qp;
            bilateral_add(qp, terms(Kernel::p, sg, j, m, a, b, y), -1.0);
            bilateral_add(pq, terms(Kernel::p, sg, j, m, a, b, y));
            compare(ctx, "R=Q-P " + tag, r, qp);
            Bilateral miss = r;
            bilateral_add(miss, pq, -1.0);
            printed = std::max(printed, bilateral_max_abs(miss) / std::max({1.0, bilateral_max_abs(r), bilateral_max_abs(pq)}));

            const HalfInt j2 = j + m.times(2);
            Bilateral p0 = terms(Kernel::p, sg, j, m, a, b, y), p1 = terms(Kernel::p, sg, j2, m, a, b, y);
            Bilateral q0 = terms(Kernel::q, sg, j, m, a, b, y), q1 = terms(Kernel::q, sg, j2, m, a, b, y);
            // j + 2m shifts the lattice by one step; keep the common window
            auto common = [&](Bilateral& x, const Bilateral& ref) {
              for (auto it = x.begin(); it != x.end();)
                it = ref.count(it->first) ? std::next(it) : x.erase(it);
            };
            common(p0, p1), common(p1, p0), common(q0, q1), common(q1, q0);
            Bilateral prhs, qrhs;
            bilateral_add(prhs, p0, pm);
            compare(ctx, "P shift " + tag, p1, prhs);
            bilateral_add(qrhs, q0, pm);
            const QExp jj = j.value(), mm = m.value();
            const QExp ex = -jj * (jj - 4 * mm * a) / (4 * mm);
            if (qrhs.count(ex)) qrhs[ex] += -2.0 * pm * e_exact(jj * b);
            compare(ctx, "Q shift " + tag, q1, qrhs);
          }
        }
      }
    }
  }
  ctx.note(label("R = P + Q (P with +E) has worst residual ", printed));
}

// Valid (a, b) for the reflection laws: a in Z/2 nonnegative, 4mb in Z.
bool admissible(const HalfInt& m, const HalfInt& a, const HalfInt& b) {
  return sgn(a.value()) >= 0 && QExp(4 * m.value() * b.value()).get_den() == 1;
}

void reflection(CheckContext& ctx) {
  for (double y : tau_ims(ctx)) {
    for (const auto& m : kernel_ms(ctx)) {
      for (const auto& j : kernel_js(ctx)) {
        for (const auto& a : kernel_as(ctx)) {
          for (const auto& b : kernel_bs(ctx)) {
            if (!admissible(m, a, b)) continue;
            const QExp mm = m.value(), jj = j.value(), aa = a.value(), bb = b.value();
            const HalfInt jr = HalfInt::from_rational(2 * mm - jj);
            const cplx c = e_exact(2 * jj * bb) * e_exact(4 * mm * aa * bb);
            const double par = a.is_integer() ? 1.0 : -1.0;  // (-1)^{2a}
            const long twoa = QExp(2 * aa).get_num().get_si();
            const std::string tag =
                label("m=", m.str(), " j=", j.str(), " a=", a.str(), " b=", b.str(), " Im tau=", y);
            for (Sign sg : {Sign::plus, Sign::minus}) {
              const bool plus = sg == Sign::plus;
              const cplx coef = plus ? c : -par * c;
              Bilateral lp = terms(Kernel::p, sg, j, m, aa, bb, y);
              bilateral_add(lp, terms(Kernel::p, sg, jr, m, aa, bb, y), coef);
              compare(ctx, label("1)", plus ? "(i) " : "(ii) ", tag), lp, {});

              Bilateral lq = terms(Kernel::q, sg, j, m, aa, bb, y);
              bilateral_add(lq, terms(Kernel::q, sg, jr, m, aa, bb, y), coef);
              Bilateral rq;
              const cplx pre = 2.0 * (plus ? 1.0 : par) * e_exact(jj * bb) * e_exact(4 * mm * aa * bb);
              for (long k = 1; k <= twoa; ++k) {
                const QExp ex = -(jj + 2 * mm * (2 * aa - k)) * (jj - 2 * mm * k) / (4 * mm);
                rq[ex] += pre * (plus ? 1.0 : ((k % 2) ? -1.0 : 1.0)) * e_exact(2 * mm * bb * k);
              }
              compare(ctx, label("2)", plus ? "(i) " : "(ii) ", tag), lq, rq);
            }
          }
        }
      }
    }
  }
}

cplx r_exact(Sign sg, const HalfInt& j, const HalfInt& m, const QExp& a, const QExp& b, cplx tau,
             const NumericParams& np) {
  return r_num(sg, RArgument::exact(j, m, a, b, tau), tau, np);
}

void r_sum_law(CheckContext& ctx) {
  const auto& np = ctx.numeric();
  for (const auto& pt : ctx.points(generic_points())) {
    const cplx tau = pt.tau;
    for (const auto& m : kernel_ms(ctx)) {
      for (const auto& j : kernel_js(ctx)) {
        const QExp mm = m.value(), jj = j.value();
        const QExp ss = jj - QExp(mpz_class(floor(jj.get_d())));  // s with j in s + Z
        const HalfInt jr = HalfInt::from_rational(2 * mm - jj);
        for (const auto& a : kernel_as(ctx)) {
          for (const auto& b : kernel_bs(ctx)) {
            if (sgn(a.value()) < 0) continue;
            const QExp aa = a.value(), bb = b.value();
            const cplx cond = e_exact(2 * ss * bb) * e_exact(4 * mm * aa * bb);
            const double par = a.is_integer() ? 1.0 : -1.0;
            const long twoa = QExp(2 * aa).get_num().get_si();
            const std::string tag = label("m=", m.str(), " j=", j.str(), " a=", a.str(), " b=", b.str(), at(pt));
            for (Sign sg : {Sign::plus, Sign::minus}) {
              const bool plus = sg == Sign::plus;
              if (std::abs((plus ? 1.0 : par) * cond + 1.0) > 1e-12) continue;
              const cplx lhs = r_exact(sg, j, m, aa, bb, tau, np) +
                               (plus ? -1.0 : 1.0) * r_exact(sg, jr, m, aa, bb, tau, np);
              cplx rhs = 0;
              for (long k = 1; k <= twoa; ++k) {
                const QExp ex = -(jj + 2 * mm * (2 * aa - k)) * (jj - 2 * mm * k) / (4 * mm);
                rhs += (plus ? 1.0 : ((k % 2) ? -1.0 : 1.0)) * e_exact(2 * mm * bb * k) * qpow(tau, ex.get_d());
              }
              rhs *= -2.0 * e_exact(jj * bb) * e_exact(2 * ss * bb);
              ctx.numeric(label(plus ? "1) " : "2) ", tag), lhs, rhs);
            }
          }
        }
      }
    }
  }
}

void note_case(CheckContext& ctx, int which) {
  const auto& np = ctx.numeric();
  const QExp a = which == 3 ? QExp(0) : QExp(1, 2);
  const QExp b = which == 2 ? QExp(0) : QExp(-1, 2);
  for (const auto& pt : ctx.points(generic_points())) {
    const cplx tau = pt.tau;
    for (const auto& m : ctx.odd_half_m()) {
      for (const auto& j : kernel_js(ctx)) {
        if (j.is_integer()) throw ParamDomain("j must lie in 1/2 + Z");
        const double md = m.to_double(), jd = j.to_double();
        const HalfInt jr = HalfInt::from_rational(2 * m.value() - j.value());
        const cplx lhs = r_exact(Sign::minus, j, m, a, b, tau, np) + r_exact(Sign::minus, jr, m, a, b, tau, np);
        const cplx qj = qpow(tau, -jd * (jd - 2 * md) / (4 * md));
        const cplx rhs = which == 1 ? -2.0 * epi(jd) * qj : (which == 2 ? 2.0 * qj : cplx(0.0));
        ctx.numeric(label("m=", m.str(), " j=", j.str(), at(pt)), lhs, rhs);
      }
    }
  }
}

}  // namespace

void add_kernel(std::vector<CheckInfo>& reg) {
  const std::string sweep = "m in {1/2,3/2}, j in {1/2,3/2}";
  reg.push_back({"kernel.RPQ", CheckKind::numeric,
                 "R = Q - P coefficientwise at w = a tau + b (P weighted by +E, R by sgn - E); P_{j+2m} = +/-P_j, Q_{j+2m} = +/-Q_j -/+ 2 e^{-pi i j^2 tau/2m "
                 "+ 2 pi i j w}",
                 sweep + ", both signs, four generic rational (a,b), window |n-2ma| <= 24", 1e-9, rpq});
  reg.push_back({"kernel.L4.1", CheckKind::numeric,
                 "P_j + e^{4 pi i jb} e^{8 pi i mab} P_{2m-j} = 0 and the Q analogue equal to a finite sum over 1 <= k <= 2a "
                 "(signed variants for the minus kernels)",
                 sweep + ", a in {0,1/2,1}, b in {0,-1/2} with 4mb in Z", 1e-9, reflection});
  reg.push_back({"kernel.P4.2", CheckKind::numeric,
                 "R^{(-)}_{j,m}(tau, a tau+b) + R^{(-)}_{2m-j,m} = -2 e^{2 pi i jb} e^{4 pi i sb} sum (-1)^k e^{4 pi i mbk} "
                 "q^{-(j+2m(2a-k))(j-2mk)/4m} under the sign condition; the plus kernel with a difference",
                 sweep + ", a in {0,1/2,1}, b in {0,-1/2} where the condition holds, generic tau", 1e-9, r_sum_law});
  const char* notes[] = {"(a,b) = (1/2,-1/2): R^{(-)}_{j,m} + R^{(-)}_{2m-j,m} = -2 e^{pi i j} q^{-j(j-2m)/4m}",
                         "(a,b) = (1/2,0): R^{(-)}_{j,m} + R^{(-)}_{2m-j,m} = 2 q^{-j(j-2m)/4m}",
                         "(a,b) = (0,-1/2): R^{(-)}_{j,m} + R^{(-)}_{2m-j,m} = 0"};
  const char* suffix[] = {"i", "ii", "iii"};
  for (int w = 1; w <= 3; ++w)
    reg.push_back({std::string("kernel.N4.1.") + suffix[w - 1], CheckKind::numeric, notes[w - 1],
                   sweep + ", generic tau", 1e-9, [w](CheckContext& c) { note_case(c, w); }});
}

}  // namespace mocktheta::checks
