#include "mocktheta/special_series.hpp"

#include "mocktheta/errors.hpp"

#include <cmath>

namespace mocktheta {

GFamilyIndex::GFamilyIndex(int i_, HalfInt m_, long p_, HalfInt k_) : i(i_), m(std::move(m_)), p(p_), k(std::move(k_)) {
  if (i < 1 || i > 3) throw ParamDomain("family index i must be 1, 2 or 3");
  if (!m.positive() || !m.is_odd_half()) throw ParamDomain("m must be a positive half-odd integer, got " + m.str());
  if (p < 0 || QExp(p) > m.value() * 2) throw ParamDomain("p must satisfy 0 <= p <= 2m, got " + std::to_string(p));
  if (!k.positive() || !k.is_odd_half() || k > m) throw ParamDomain("k must be half-odd with 0 < k <= m, got " + k.str());
}

std::vector<HalfInt> odd_half_range(const HalfInt& m) {
  std::vector<HalfInt> out;
  for (long t = 1; HalfInt::from_twice(t) <= m; t += 2) out.push_back(HalfInt::from_twice(t));
  return out;
}

FormalSeries eta_series(const QExp& scale, const QExp& order) {
  if (sgn(scale) <= 0) throw ParamDomain("eta scale must be positive");
  // Euler: prod (1 - x^n) = sum_k (-1)^k x^{k(3k-1)/2}
  FormalSeries s(order);
  const QExp base = scale / 24;
  for (long k = 0;; ++k) {
    bool any = false;
    for (int side = 0; side < (k == 0 ? 1 : 2); ++side) {
      const long kk = side ? -k : k;
      QExp e = base + scale * frac(kk * (3 * kk - 1), 2);
      if (e < order) {
        s.add_term(e, GaussRat(kk % 2 == 0 ? 1 : -1));
        any = true;
      }
    }
    if (!any && base + scale * frac(k * (3 * k - 1), 2) >= order && base + scale * frac(k * (3 * k + 1), 2) >= order) break;
  }
  return s;
}

FormalSeries eta_quotient_series(const EtaSpec& spec, const QExp& order) {
  if (spec.factors.empty()) throw ParamDomain("eta quotient needs at least one factor");
  QExp margin = 1;
  for (const auto& f : spec.factors) {
    if (sgn(f.scale) <= 0) throw ParamDomain("eta scale must be positive");
    margin += 2 * f.scale * std::abs(f.exponent) / 24;
  }
  const QExp work = order + margin;
  FormalSeries acc = FormalSeries::one(work);
  for (const auto& f : spec.factors) {
    if (f.exponent == 0) continue;
    acc = series_mul(acc, series_pow(eta_series(f.scale, work), f.exponent));
  }
  if (acc.order() < order) throw InsufficientOrder("eta quotient lost order");
  return acc.truncated(order);
}

FormalSeries theta_nullwert_series(const HalfInt& j, const HalfInt& m, Sign sign, const QExp& order) {
  if (!m.positive()) throw ParamDomain("theta index m must be positive");
  FormalSeries s(order);
  // exponent m (n + j/2m)^2 = (2mn + j)^2 / 4m
  const QExp mm = m.value();
  const QExp jj = j.value();
  const double bound = std::sqrt(std::max(0.0, 4.0 * mm.get_d() * order.get_d())) + 1.0;
  const long lo = static_cast<long>(std::floor((-bound - jj.get_d()) / (2 * mm.get_d()))) - 1;
  const long hi = static_cast<long>(std::ceil((bound - jj.get_d()) / (2 * mm.get_d()))) + 1;
  for (long n = lo; n <= hi; ++n) {
    QExp x = 2 * mm * n + jj;
    s.add_term(x * x / (4 * mm), GaussRat(sign_pow(sign, n)));
  }
  return s;
}

namespace {

bool first_region(BracketVariant v, long j, long r) {
  switch (v) {
    case BracketVariant::half_open: return 0 <= r && r < j;
    case BracketVariant::closed: return 0 <= r && r <= j;
    default: return 0 < r && r <= j;
  }
}

bool second_region(BracketVariant v, long j, long r) {
  switch (v) {
    case BracketVariant::half_open: return j <= r && r < 0;
    case BracketVariant::closed: return j < r && r < 0;
    default: return j < r && r <= 0;
  }
}

// Smallest J such that every |j| >= J has all admissible exponents >= order.
long bracket_j_bound(const BracketSumSpec& s, const QExp& order) {
  const double a = s.alpha.get_d(), b = s.beta.get_d();
  const double c = std::abs(s.c.get_d()), d = std::abs(s.d.get_d()) + 1.0;
  const double vertex = (a * c + b * d) / (a - b);
  auto lower = [&](double J) {
    double x = std::max(0.0, J - c);
    return a * x * x - b * (J + d) * (J + d);
  };
  long J = 0;
  while (J <= vertex + 1 || lower(J) < order.get_d() + 1.0) ++J;
  return J + 1;
}

}  // namespace

FormalSeries bracket_sum_series(const BracketSumSpec& spec, const QExp& order) {
  if (sgn(spec.beta) <= 0 || spec.alpha <= spec.beta)
    throw NonTerminating("bracket sum needs alpha > beta > 0");
  FormalSeries s(order);
  const long J = bracket_j_bound(spec, order);
  for (long j = -J; j <= J; ++j) {
    const QExp jc = j + spec.c;
    const QExp head = spec.alpha * jc * jc;
    for (long r = std::min(0L, j) - 1; r <= std::max(0L, j) + 1; ++r) {
      int w = first_region(spec.variant, j, r) ? 1 : (second_region(spec.variant, j, r) ? -1 : 0);
      if (w == 0) continue;
      const QExp rd = r + spec.d;
      QExp e = head - spec.beta * rd * rd;
      if (e >= order) continue;
      long ph = 1;
      if (spec.phase == BracketPhase::minus_one_pow_j) ph = (j % 2 == 0) ? 1 : -1;
      if (spec.phase == BracketPhase::minus_one_pow_r) ph = (r % 2 == 0) ? 1 : -1;
      s.add_term(e, spec.prefactor * GaussRat(w * ph));
    }
  }
  return s;
}

FormalSeries nullwert_times(const HalfInt& j, const HalfInt& m, Sign sign, const FormalSeries& poly, const QExp& order) {
  if (poly.is_zero()) return FormalSeries(order);
  QExp ext = order - std::min(QExp(0), poly.valuation());
  return series_mul(theta_nullwert_series(j, m, sign, ext), poly).truncated(order);
}

FormalSeries g_series(const GFamilyIndex& idx, const QExp& order) {
  const HalfInt& m = idx.m;
  const HalfInt& k = idx.k;
  const long p = idx.p;
  const QExp mm = m.value();
  const QExp kk = k.value();
  const QExp alpha = mm + QExp(1, 2);
  const HalfInt theta_m = m + HalfInt::from_twice(1);
  const bool top = (k == m);
  const GaussRat eik = GaussRat::exp_pi_i(k);
  const GaussRat eim = GaussRat::exp_pi_i(m);
  const GaussRat sgn_p(p % 2 == 0 ? 1 : -1);

  BracketSumSpec first{alpha, 0, mm, 0};
  BracketSumSpec second = first;
  FormalSeries poly(order);
  FormalSeries out(order);

  auto brackets = [&](bool with_second) {
    out = bracket_sum_series(first, order);
    if (with_second) out = out + bracket_sum_series(second, order);
  };

  if (idx.i == 1 || idx.i == 2) {
    const HalfInt tj = m.times(2 * p + 1);
    const Sign tsign = idx.i == 1 ? Sign::minus : Sign::plus;
    first.c = second.c = mm * (2 * p + 1) / (2 * mm + 1);
    if (idx.i == 1) {
      first.phase = second.phase = BracketPhase::minus_one_pow_j;
      if (!top) {
        first.prefactor = second.prefactor = eik;
        first.variant = BracketVariant::half_open;
        first.d = p + (mm + kk) / (2 * mm);
        second.variant = BracketVariant::closed;
        second.d = p + (mm - kk) / (2 * mm);
        for (long r = -p + 1; r <= p; ++r) {
          QExp x = r + (kk - mm) / (2 * mm);
          poly.add_term(-mm * x * x, eik);
        }
      } else {
        first.prefactor = eim;
        first.variant = BracketVariant::shifted;
        first.d = p;
        for (long r = -p; r <= p; ++r) poly.add_term(-mm * r * r, eim * GaussRat(QExp(1, 2)));
      }
    } else {
      first.phase = second.phase = BracketPhase::minus_one_pow_r;
      if (!top) {
        first.prefactor = sgn_p;
        second.prefactor = -sgn_p;
        first.variant = BracketVariant::half_open;
        first.d = p + (mm + kk) / (2 * mm);
        second.variant = BracketVariant::closed;
        second.d = p + (mm - kk) / (2 * mm);
        for (long r = -p + 1; r <= p; ++r) {
          QExp x = r + (kk - mm) / (2 * mm);
          poly.add_term(-mm * x * x, GaussRat(r % 2 == 0 ? -1 : 1));
        }
      } else {
        first.prefactor = -sgn_p;
        first.variant = BracketVariant::shifted;
        first.d = p;
        for (long r = -p; r <= p; ++r) poly.add_term(-mm * r * r, GaussRat(QExp(r % 2 == 0 ? -1 : 1, 2)));
      }
    }
    brackets(!top);
    return out + nullwert_times(tj, theta_m, tsign, poly, order);
  }

  const HalfInt tj = m.times(2 * p);
  first.c = second.c = 2 * mm * p / (2 * mm + 1);
  first.phase = second.phase = BracketPhase::minus_one_pow_j;
  if (!top) {
    first.prefactor = second.prefactor = eik;
    first.variant = BracketVariant::half_open;
    first.d = p + kk / (2 * mm);
    second.variant = BracketVariant::closed;
    second.d = p - kk / (2 * mm);
    // -p < r < p read as an oriented sum: at p = 0 it is minus the r = 0 term
    for (long r = -p + 1; r < p; ++r) {
      QExp x = 2 * mm * r + kk;
      poly.add_term(-x * x / (4 * mm), eik);
    }
    if (p == 0) poly.add_term(-kk * kk / (4 * mm), -eik);
  } else {
    first.prefactor = eim;
    first.variant = BracketVariant::shifted;
    first.d = p - QExp(1, 2);
    for (long r = 1; r <= p; ++r) poly.add_term(-mm * (2 * r - 1) * (2 * r - 1) / 4, eim);
  }
  brackets(!top);
  return out + nullwert_times(tj, theta_m, Sign::minus, poly, order);
}

FormalSeries gtilde_series(int n, const QExp& order) {
  const HalfInt half = HalfInt::from_twice(1);
  switch (n) {
    case 1: return g_series(GFamilyIndex(1, half, 1, half), order).scaled(GaussRat(0, -1));
    case 2: return g_series(GFamilyIndex(2, half, 1, half), order);
    case 3: return g_series(GFamilyIndex(3, half, 1, half), order).scaled(GaussRat(0, -1));
    default: throw ParamDomain("gtilde index must be 1, 2 or 3");
  }
}

}  // namespace mocktheta
