#include "checks.hpp"

namespace mocktheta::checks {

namespace {

// [theta^{(-)}_{k,m} - theta^{(-)}_{-k,m}](tau, z) for half-odd 0 < k <= m.
struct DiffTable {
  std::vector<HalfInt> ks;
  std::vector<cplx> d;
  cplx theta_mm;  // theta^{(-)}_{m,m}(tau, z)
};

DiffTable diffs(const HalfInt& m, cplx tau, cplx z, const NumericParams& np) {
  DiffTable t;
  t.ks = odd_half_range(m);
  for (const auto& k : t.ks) t.d.push_back(theta_diff(Sign::minus, k, m, tau, z, np));
  t.theta_mm = theta_num(Sign::minus, m, m, tau, z, np);
  return t;
}

// theta_{j,m}(tau, 0) summed exactly first: it vanishes outright when j/2m is a half-integer and the sign is minus.
cplx nullwert(Sign sign, const HalfInt& j, const HalfInt& m, cplx tau) {
  return series_eval(theta_nullwert_series(j, m, sign, QExp(40)), tau).value;
}

double neg1(long n) { return (n % 2 == 0) ? 1.0 : -1.0; }

cplx eta3(cplx tau) {
  const cplx e = eta_num(1.0, tau);
  return e * e * e;
}

cplx phi_minus(const HalfInt& m, cplx tau, cplx z1, cplx z2, const NumericParams& np) {
  return phi_num(Sign::minus, m, half(), PhiPart::full, EvalPoint(tau, z1, z2), np);
}

// Eq. for Phi^{(-)[m,1/2]} multiplied by a theta of index m+1/2.
void phi_theta_product(CheckContext& ctx) {
  const auto& np = ctx.numeric();
  for (const auto& pt : ctx.points(generic_points())) {
    const cplx tau = pt.tau, z1 = pt.z1, z2 = pt.z2, d = z1 - z2, s = z1 + z2;
    const cplx e3 = eta3(tau);
    for (const auto& m : ctx.halfints("m", {hf(1), hf(2), hf(3)})) {
      const double md = m.to_double();
      const HalfInt mh = m + half();
      const long twom = m.twice_long();
      std::vector<cplx> dk;  // k odd, 1 <= k <= 2m, at index k
      dk.resize(twom + 1);
      for (long k = 1; k <= twom; k += 2) dk[k] = theta_diff(Sign::minus, hf(k), m, tau, s, np);

      const cplx lhs = theta_num(Sign::minus, 0, mh, tau, (-1.0 + 2 * md * d) / (2 * md + 1), np) *
                       phi_minus(m, tau, z1, z2, np);
      cplx rhs = -I * e3 *
                 (theta_num(Sign::minus, 0, mh, tau, (1.0 + d) / (2 * md + 1) + s, np) / mumford_theta(11, tau, z1, np) +
                  theta_num(Sign::minus, 0, mh, tau, (1.0 + d) / (2 * md + 1) - s, np) / mumford_theta(11, tau, z2, np));
      auto cosh_like = [&](double x) { return std::exp(pi * I / 2.0 * x * d) + std::exp(-pi * I / 2.0 * x * d); };
      auto shell = [&](long j) {
        cplx acc = 0;
        double mag = 0;
        for (long r = 1; r <= j; ++r)
          for (long k = 1; k <= twom; k += 2) {
            const double a = 4 * md * (j - r) + k;
            const cplx t = neg1(j + r) * qpow(tau, (md + 0.5) * j * j - a * a / (16 * md)) *
                           cosh_like(4 * md * r - k) * dk[k];
            acc += t;
            mag += std::abs(t);
          }
        for (long r = 0; r <= j - 1; ++r)
          for (long k = 1; k < twom; k += 2) {
            const double a = 4 * md * (j - r) - k;
            const cplx t = neg1(j + r) * qpow(tau, (md + 0.5) * j * j - a * a / (16 * md)) *
                           cosh_like(4 * md * r + k) * dk[k];
            acc -= t;
            mag += std::abs(t);
          }
        return std::pair<cplx, double>{acc, mag};
      };
      rhs += sum_shells(shell, 1, 3, np, "triple sum");
      ctx.numeric(label("m=", m.str(), at2(pt)), lhs, rhs);
    }
  }
}

// Exact q-series coefficients of [theta_k - theta_-k], 0 < k <= m, in the lattice part of the
// shifted-point expansions: the brackets are rewritten as (m+1/2)(j+c)^2 - m(r+d)^2 plus a constant,
// the line sum as a theta nullwert of index m+1/2.
// rphase: (-1)^r weights (second family) instead of (-1)^j e^{pi i k}.
std::vector<FormalSeries> shifted_coefficients(bool rphase, const HalfInt& m, const HalfInt& lin, const QExp& shift,
                                               const QExp& order) {
  const QExp mm = m.value(), big = mm + QExp(1, 2), l = lin.value();
  const QExp c = l / (2 * big);
  const QExp off = mm * shift * shift - big * c * c;
  std::vector<FormalSeries> out;
  for (const auto& k : odd_half_range(m)) {
    const QExp kk = k.value();
    const GaussRat w = rphase ? GaussRat(1) : GaussRat::exp_pi_i(k);
    auto bracket = [&](bool plus) {
      const QExp d = (plus ? kk : QExp(-kk)) / (2 * mm) + shift;
      const BracketSumSpec spec{big, c, mm, d,
                                rphase ? BracketPhase::minus_one_pow_r : BracketPhase::minus_one_pow_j,
                                plus ? BracketVariant::half_open : BracketVariant::closed, w};
      return bracket_sum_series(spec, order - off).shifted(off);
    };
    FormalSeries f = bracket(true);
    if (k < m) {
      FormalSeries mono(order);
      mono.add_term(-l * l / (4 * big) - kk * kk / (4 * mm) + shift * kk, w);
      const FormalSeries line = nullwert_times(lin, m + half(), rphase ? Sign::plus : Sign::minus, mono, order);
      f = rphase ? f - bracket(false) + line : f + bracket(false) - line;
    }
    out.push_back(f);
  }
  return out;
}

cplx lattice_part(const std::vector<FormalSeries>& coef, cplx tau, const DiffTable& t) {
  cplx acc = 0;
  for (std::size_t i = 0; i < coef.size(); ++i) acc += series_eval(coef[i], tau).value * t.d[i];
  return acc;
}

void shifted_points(CheckContext& ctx, int part) {
  const auto& np = ctx.numeric();
  const QExp order = ctx.order(40);
  for (const auto& m : ctx.odd_half_m()) {
    const double md = m.to_double();
    const HalfInt mh = m + half();
    for (long p : ctx.ints("p", {0, 1, 2})) {
      if (p < 0) throw ParamDomain("p must be non-negative");
      const double pd = double(p);
      const auto coef = part == 3 ? shifted_coefficients(false, m, m.times(2 * p), QExp(p), order)
                                  : shifted_coefficients(part == 2, m, m.times(2 * p + 1), QExp(2 * p + 1, 2), order);
      for (const auto& pt : ctx.points(generic_points())) {
        const cplx tau = pt.tau, z = pt.z();
        const cplx e3 = eta3(tau);
        const DiffTable t = diffs(m, tau, z, np);
        cplx lhs, rhs;
        if (part == 1 || part == 2) {
          const HalfInt jj = m.times(2 * p + 1);
          const HalfInt ph = HalfInt(p) + half();
          const double pre = -md * md * (2 * pd + 1) * (2 * pd + 1) / (2 * (2 * md + 1));
          const double qf = md * (2 * pd + 1) * (2 * pd + 1) / (4 * (2 * md + 1));
          if (part == 1) {
            lhs = qpow(tau, pre) * nullwert(Sign::minus, jj, mh, tau) *
                  phi_minus(m, tau, z / 2.0 + tau / 2.0 - 0.5 + pd * tau, z / 2.0 - tau / 2.0 + 0.5 - pd * tau, np);
            rhs = -I * e3 * qpow(tau, qf) * theta_diff(Sign::minus, ph, mh, tau, z, np) /
                  theta_num(Sign::plus, 0, half(), tau, z, np);
          } else {
            lhs = qpow(tau, pre) * nullwert(Sign::plus, jj, mh, tau) *
                  phi_minus(m, tau, z / 2.0 + tau / 2.0 + pd * tau, z / 2.0 - tau / 2.0 - pd * tau, np);
            rhs = neg1(p) * e3 * qpow(tau, qf) * theta_diff(Sign::plus, ph, mh, tau, z, np) /
                  theta_num(Sign::minus, 0, half(), tau, z, np);
          }
        } else {
          const HalfInt jj = m.times(2 * p);
          lhs = qpow(tau, -2 * md * md * pd * pd / (2 * md + 1)) * nullwert(Sign::minus, jj, mh, tau) *
                phi_minus(m, tau, z / 2.0 - 0.5 + pd * tau, z / 2.0 + 0.5 - pd * tau, np);
          rhs = -I * e3 * qpow(tau, md * pd * pd / (2 * md + 1)) * theta_diff(Sign::minus, HalfInt(p), mh, tau, z, np) /
                theta_num(Sign::plus, half(), half(), tau, z, np);
        }
        rhs += lattice_part(coef, tau, t);
        ctx.numeric(label("m=", m.str(), " p=", p, at(pt)), lhs, rhs);
      }
    }
  }
}

// Right-hand side of the p-fold shift law for part 3, with the outer power of q
// given explicitly. -p < r < p is oriented: at p = 0 it is minus the r = 0 term.
cplx shift_part3_rhs(double outer, const HalfInt& m, long p, cplx tau, cplx phi0, const DiffTable& t) {
  const double md = m.to_double(), pd = double(p);
  cplx braces = phi0;
  for (std::size_t i = 0; i < t.ks.size(); ++i) {
    const HalfInt& k = t.ks[i];
    if (k == m) continue;
    const double kd = k.to_double();
    for (long r = -p + 1; r < p; ++r) {
      const double a = 2 * md * r + kd;
      braces -= epi(kd) * qpow(tau, -a * a / (4 * md)) * t.d[i];
    }
    if (p == 0) braces += epi(kd) * qpow(tau, -kd * kd / (4 * md)) * t.d[i];
    braces -= qpow(tau, -md * pd * pd) * epi(kd) * qpow(tau, -kd * kd / (4 * md) + pd * kd) * t.d[i];
  }
  for (long r = -p; r < p; ++r)
    braces -= epi(md) * qpow(tau, -md / 4 * (2 * r + 1) * (2 * r + 1)) * t.theta_mm;
  return qpow(tau, outer) * braces;
}

void shift_law(CheckContext& ctx, int part) {
  const auto& np = ctx.numeric();
  double variant_worst = 0;
  for (const auto& pt : ctx.points(generic_points())) {
    const cplx tau = pt.tau, z = pt.z();
    cplx z1, z2;
    if (part == 1) z1 = z / 2.0 + tau / 2.0 - 0.5, z2 = z / 2.0 - tau / 2.0 + 0.5;
    else if (part == 2) z1 = z / 2.0 + tau / 2.0, z2 = z / 2.0 - tau / 2.0;
    else z1 = z / 2.0 - 0.5, z2 = z / 2.0 + 0.5;
    for (const auto& m : ctx.odd_half_m()) {
      const double md = m.to_double();
      const DiffTable t = diffs(m, tau, z, np);
      const cplx phi0 = phi_minus(m, tau, z1, z2, np);
      for (long p : ctx.ints("p", {0, 1, 2})) {
        if (p < 0) throw ParamDomain("p must be non-negative");
        const double pd = double(p);
        const cplx lhs = phi_minus(m, tau, z1 + pd * tau, z2 - pd * tau, np);
        const std::string tg = label("m=", m.str(), " p=", p, at(pt));
        if (part == 3) {
          ctx.numeric(tg, lhs, shift_part3_rhs(md * pd * pd, m, p, tau, phi0, t));
          variant_worst = std::max(variant_worst, relative_residual(lhs, shift_part3_rhs(md * pd * (pd + 1), m, p, tau, phi0, t)));
          continue;
        }
        const bool rp = part == 2;
        cplx braces = phi0;
        for (std::size_t i = 0; i < t.ks.size(); ++i) {
          const HalfInt& k = t.ks[i];
          if (k == m) continue;
          const double kd = k.to_double();
          const cplx w = rp ? cplx(1.0) : epi(kd);
          for (long r = -p + 1; r <= p; ++r) {
            const double ex = -(2 * md * r + kd) * (2 * md * (r - 1) + kd) / (4 * md);
            braces += (rp ? neg1(r) : -1.0) * w * qpow(tau, ex) * t.d[i];
          }
          const cplx tail = qpow(tau, -md * pd * (pd + 1)) * w * qpow(tau, -kd * kd / (4 * md) + (2 * pd + 1) * kd / 2) * t.d[i];
          braces += rp ? neg1(p) * tail : -tail;
          braces += (rp ? -1.0 : 1.0) * w * qpow(tau, kd * (2 * md - kd) / (4 * md)) * t.d[i];
        }
        const cplx wm = rp ? cplx(1.0) : epi(md);
        for (long r = -p; r <= p; ++r)
          braces += (rp ? neg1(r) : -1.0) * wm * qpow(tau, -md / 4 * (2 * r - 1) * (2 * r + 1)) * t.theta_mm;
        braces += (rp ? -1.0 : 1.0) * wm * qpow(tau, md / 4) * t.theta_mm;
        ctx.numeric(tg, lhs, (rp ? neg1(p) : 1.0) * qpow(tau, md * pd * (pd + 1)) * braces);
      }
    }
  }
  if (part == 3) ctx.note(label("outer power q^{mp^2}; with q^{mp(p+1)} the worst residual is ", variant_worst));
}

void decomposition(CheckContext& ctx, int part) {
  const auto& np = ctx.numeric();
  const QExp order = ctx.order(40);
  std::map<std::pair<std::string, long>, std::vector<FormalSeries>> cache;
  auto coefficients = [&](int pt, const HalfInt& m, long p) -> const std::vector<FormalSeries>& {
    auto [it, fresh] = cache.try_emplace({m.str(), p});
    if (fresh) it->second = decomposition_coefficients(pt, m, p, order);
    return it->second;
  };
  for (const auto& pt : ctx.points(generic_points())) {
    const cplx tau = pt.tau, z = pt.z();
    for (const auto& m : ctx.odd_half_m()) {
      const cplx corr = add_corrections(part, m, tau, z, np);
      const cplx phi = part == 1   ? phi_minus(m, tau, z / 2.0 + tau / 2.0 - 0.5, z / 2.0 - tau / 2.0 + 0.5, np)
                       : part == 2 ? phi_minus(m, tau, z / 2.0 + tau / 2.0, z / 2.0 - tau / 2.0, np)
                                   : phi_minus(m, tau, z / 2.0 - 0.5, z / 2.0 + 0.5, np);
      for (long p : ctx.ints("p", {0, 1, 2})) {
        if (p < 0) throw ParamDomain("p must be non-negative");
        ctx.numeric(label("m=", m.str(), " p=", p, at(pt)), decomposition_prefactor(part, m, p, tau) * (phi + corr),
                    decomposition_rhs(part, m, p, tau, z, coefficients(part, m, p), np));
      }
    }
  }
}

}  // namespace

cplx add_corrections(int part, const HalfInt& m, cplx tau, cplx z, const NumericParams& np) {
  if (part == 3) return 0.0;
  const bool rp = part == 2;
  const double md = m.to_double();
  const DiffTable t = diffs(m, tau, z, np);
  cplx acc = 0;
  for (std::size_t i = 0; i < t.ks.size(); ++i) {
    const HalfInt& k = t.ks[i];
    if (k == m) continue;
    const double kd = k.to_double();
    acc += (rp ? cplx(-1.0) : epi(kd)) * qpow(tau, kd * (2 * md - kd) / (4 * md)) * t.d[i];
  }
  return acc + (rp ? cplx(-1.0) : epi(md)) * qpow(tau, md / 4) * t.theta_mm;
}

cplx decomposition_prefactor(int part, const HalfInt& m, long p, cplx tau) {
  const HalfInt mh = m + half();
  if (part == 3) return nullwert(Sign::minus, m.times(2 * p), mh, tau);
  return qpow(tau, -m.to_double() / 4) *
         nullwert(part == 2 ? Sign::plus : Sign::minus, m.times(2 * p + 1), mh, tau);
}

std::vector<FormalSeries> decomposition_coefficients(int part, const HalfInt& m, long p, const QExp& order) {
  const QExp mm = m.value(), big = mm + QExp(1, 2);
  const bool rp = part == 2;
  const GaussRat sp(p % 2 == 0 ? 1 : -1), eim = GaussRat::exp_pi_i(m);
  const HalfInt tj = part == 3 ? m.times(2 * p) : m.times(2 * p + 1);
  const QExp c = part == 3 ? QExp(2 * mm * p / (2 * big)) : QExp(mm * (2 * p + 1) / (2 * big));
  std::vector<FormalSeries> out;
  for (const auto& k : odd_half_range(m)) {
    const QExp kk = k.value();
    const GaussRat ek = GaussRat::exp_pi_i(k);
    auto bracket = [&](bool plus) {
      const QExp sk = plus ? kk : QExp(-kk);
      const QExp d = part == 3 ? QExp(p + sk / (2 * mm)) : QExp(p + (mm + sk) / (2 * mm));
      const BracketSumSpec spec{big, c, mm, d, rp ? BracketPhase::minus_one_pow_r : BracketPhase::minus_one_pow_j,
                                plus ? BracketVariant::half_open : BracketVariant::closed,
                                rp ? (plus ? sp : -sp) : ek};
      return bracket_sum_series(spec, order);
    };
    FormalSeries f = bracket(true);
    FormalSeries poly(order);
    if (k < m) {
      f = f + bracket(false);
      if (part == 3) {
        // -p < r < p, oriented
        for (long r = -p + 1; r < p; ++r) {
          const QExp x = 2 * mm * r + kk;
          poly.add_term(-x * x / (4 * mm), ek);
        }
        if (p == 0) poly.add_term(-kk * kk / (4 * mm), -ek);
      } else {
        for (long r = -p + 1; r <= p; ++r) {
          const QExp x = r + (kk - mm) / (2 * mm);
          poly.add_term(-mm * x * x, rp ? GaussRat(r % 2 == 0 ? -1 : 1) : ek);
        }
      }
    } else if (part == 3) {
      // theta_m - theta_-m = 2 theta_mm
      for (long r = 0; r < p; ++r) poly.add_term(-mm * (2 * r + 1) * (2 * r + 1) / 4, eim);
    } else {
      for (long r = -p; r <= p; ++r)
        poly.add_term(-mm * r * r, rp ? GaussRat(QExp(r % 2 == 0 ? -1 : 1, 2)) : eim * GaussRat(QExp(1, 2)));
    }
    out.push_back(f + nullwert_times(tj, m + half(), part == 2 ? Sign::plus : Sign::minus, poly, order));
  }
  return out;
}

cplx decomposition_rhs(int part, const HalfInt& m, long p, cplx tau, cplx z, const std::vector<FormalSeries>& coef,
                       const NumericParams& np) {
  const cplx e3 = eta3(tau);
  const DiffTable t = diffs(m, tau, z, np);
  const HalfInt mh = m + half();
  cplx rhs;
  if (part == 3) {
    rhs = -I * e3 * theta_diff(Sign::minus, HalfInt(p), mh, tau, z, np) / theta_num(Sign::plus, half(), half(), tau, z, np);
  } else {
    const HalfInt ph = HalfInt(p) + half();
    rhs = part == 2 ? e3 * theta_diff(Sign::plus, ph, mh, tau, z, np) / theta_num(Sign::minus, 0, half(), tau, z, np)
                    : -I * e3 * theta_diff(Sign::minus, ph, mh, tau, z, np) / theta_num(Sign::plus, 0, half(), tau, z, np);
  }
  return rhs + lattice_part(coef, tau, t);
}

void add_sec3(std::vector<CheckInfo>& reg) {
  const std::string sweep = "m in {1/2,3/2}, p in {0,1,2}, generic points";
  reg.push_back({"eq3.5", CheckKind::numeric,
                 "theta^{(-)}_{0,m+1/2}(tau,(-1+2m(z1-z2))/(2m+1)) Phi^{(-)[m,1/2]}(tau,z1,z2,0) as eta^3 over vartheta_11 "
                 "plus triple sums over j >= 1, 1 <= r <= j (resp. 0 <= r < j), odd k",
                 "m in {1/2,1,3/2}, generic points", 1e-7, phi_theta_product});
  const char* shifted_cite[] = {
      "theta^{(-)}_{(2p+1)m,m+1/2}(tau,0) Phi^{(-)[m,1/2]} at (z/2+tau/2-1/2+p tau, z/2-tau/2+1/2-p tau): eta^3 term "
      "plus two bracket sums and a line sum, weights (-1)^j e^{pi i k}",
      "theta_{(2p+1)m,m+1/2}(tau,0) Phi^{(-)[m,1/2]} at (z/2+tau/2+p tau, z/2-tau/2-p tau): eta^3 term plus two "
      "bracket sums and a line sum, weights (-1)^r",
      "theta^{(-)}_{2pm,m+1/2}(tau,0) Phi^{(-)[m,1/2]} at (z/2-1/2+p tau, z/2+1/2-p tau): eta^3 term over "
      "theta_{1/2,1/2} plus two bracket sums and a line sum"};
  const char* shift_cite[] = {
      "Phi^{(-)[m,1/2]}(tau,z1+p tau,z2-p tau,0) = q^{mp(p+1)} {Phi - finite theta corrections}, "
      "(z1,z2) = (z/2+tau/2-1/2, z/2-tau/2+1/2)",
      "Phi^{(-)[m,1/2]}(tau,z1+p tau,z2-p tau,0) = (-1)^p q^{mp(p+1)} {Phi + finite theta corrections}, "
      "(z1,z2) = (z/2+tau/2, z/2-tau/2)",
      "Phi^{(-)[m,1/2]}(tau,z1+p tau,z2-p tau,0) = q^{mp^2} {Phi - finite theta corrections}, "
      "(z1,z2) = (z/2-1/2, z/2+1/2)"};
  const char* decomp_cite[] = {
      "q^{-m/4} theta^{(-)}_{(2p+1)m,m+1/2}(tau,0) {Phi + corrections} at (z/2+tau/2-1/2, z/2-tau/2+1/2) as "
      "eta^3 term plus completed-square bracket sums and finite sums",
      "q^{-m/4} theta_{(2p+1)m,m+1/2}(tau,0) {Phi - corrections} at (z/2+tau/2, z/2-tau/2) as eta^3 term plus "
      "completed-square bracket sums and finite sums",
      "theta^{(-)}_{2pm,m+1/2}(tau,0) Phi at (z/2-1/2, z/2+1/2) as eta^3 term plus completed-square bracket sums "
      "and finite sums"};
  for (int part = 1; part <= 3; ++part) {
    reg.push_back({label("lemma3.2.", part), CheckKind::numeric, shifted_cite[part - 1], sweep, 1e-6,
                   [part](CheckContext& c) { shifted_points(c, part); }});
    reg.push_back({label("lemma3.3.", part), CheckKind::numeric, shift_cite[part - 1], sweep, 1e-6,
                   [part](CheckContext& c) { shift_law(c, part); }});
    reg.push_back({label("prop3.4.", part), CheckKind::numeric, decomp_cite[part - 1], sweep, 1e-6,
                   [part](CheckContext& c) { decomposition(c, part); }});
  }
}

}  // namespace mocktheta::checks
