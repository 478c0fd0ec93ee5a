#include "mocktheta/numerics.hpp"

namespace mocktheta {

namespace {

// N / (1 - e^X), rewritten through e^{-X} when |e^X| > 1.  logN is log of the numerator.
cplx quotient(cplx logN, cplx X, double guard, const char* where, long j) {
  if (X.real() <= 0) {
    const cplx den = 1.0 - std::exp(X);
    if (std::abs(den) < guard) throw NearPole(where, j);
    return std::exp(logN) / den;
  }
  const cplx den = 1.0 - std::exp(-X);
  if (std::abs(den) < guard) throw NearPole(where, j);
  return -std::exp(logN - X) / den;
}

cplx phi_part(Sign sign, double m, double s, int part, const EvalPoint& pt, const NumericParams& np) {
  const cplx tau = pt.tau, z1 = pt.z1, z2 = pt.z2;
  const double center_f = -((s - 0.5) * tau.imag() + m * (z1 + z2).imag()) / (2 * m * tau.imag());
  const char* where = part == 1 ? "phi_1" : "phi_2";
  auto term = [&](long jl) {
    const double j = double(jl);
    const double sg = sign_pow(sign, jl);
    if (part == 1) {
      const cplx logN = 2.0 * pi * I * (m * j * (z1 + z2) + s * z1 + tau * (m * j * j + s * j));
      return sg * quotient(logN, 2.0 * pi * I * (z1 + j * tau), np.pole_guard, where, jl);
    }
    const cplx logN = 2.0 * pi * I * (-m * j * (z1 + z2) - s * z2 + tau * (m * j * j + s * j));
    return sg * quotient(logN, 2.0 * pi * I * (-z2 + j * tau), np.pole_guard, where, jl);
  };
  const double c2 = part == 1 ? center_f : -((s - 0.5) * tau.imag() - m * (z1 + z2).imag()) / (2 * m * tau.imag());
  return detail::sum_lattice(term, detail::round_to_long(c2), 2, np, where) * std::exp(-2.0 * pi * I * m * pt.t);
}

}  // namespace

cplx phi_num(Sign sign, const HalfInt& m, const HalfInt& s, PhiPart part, const EvalPoint& pt, const NumericParams& np) {
  if (!m.positive()) throw ParamDomain("m must be positive");
  const double mm = m.to_double(), ss = s.to_double();
  switch (part) {
    case PhiPart::one: return phi_part(sign, mm, ss, 1, pt, np);
    case PhiPart::two: return phi_part(sign, mm, ss, 2, pt, np);
    default: return phi_part(sign, mm, ss, 1, pt, np) - phi_part(sign, mm, ss, 2, pt, np);
  }
}

RArgument RArgument::exact(HalfInt j, HalfInt m, const QExp& a, const QExp& b, cplx tau) {
  return {std::move(j), std::move(m), a.get_d() * tau + b.get_d(), a, b};
}

namespace {

struct KernelGeometry {
  double j, m, rho, sq;
  long center;
};

KernelGeometry geometry(const RArgument& arg, cplx tau) {
  if (!arg.m.positive()) throw ParamDomain("m must be positive");
  if (!(tau.imag() > 0)) throw ParamDomain("Im tau must be positive");
  KernelGeometry g;
  g.j = arg.j.to_double();
  g.m = arg.m.to_double();
  g.rho = arg.im_ratio(tau);
  g.sq = std::sqrt(tau.imag() / g.m);
  g.center = detail::round_to_long((2 * g.m * g.rho - g.j) / (2 * g.m));
  return g;
}

cplx gauss_phase(double n, double m, cplx tau, cplx w) { return -pi * I * tau * n * n / (2 * m) + 2.0 * pi * I * n * w; }

}  // namespace

cplx r_num(Sign sign, const RArgument& arg, cplx tau, const NumericParams& np) {
  const KernelGeometry g = geometry(arg, tau);
  auto term = [&](long k) {
    const double n = g.j + 2 * g.m * k;
    const double sg = k >= 0 ? 1.0 : -1.0;
    const double y = (n - 2 * g.m * g.rho) * g.sq;
    const cplx ph = gauss_phase(n, g.m, tau, arg.w);
    cplx v;
    if (y * sg > 0) {
      v = sg * std::exp(ph + log_erfc(std::sqrt(pi) * std::abs(y)));
    } else {
      v = (sg - e_kernel(y)) * std::exp(ph);
    }
    return double(sign_pow(sign, k)) * v;
  };
  const long reach = std::abs(g.center) + 2;
  return detail::sum_lattice(term, g.center, reach, np, "R");
}

namespace {

cplx windowed(Kernel which, Sign sign, const RArgument& arg, cplx tau, long half_width) {
  const KernelGeometry g = geometry(arg, tau);
  cplx acc = 0;
  for (long k = g.center - half_width; k <= g.center + half_width; ++k) {
    const double n = g.j + 2 * g.m * k;
    const double coeff = which == Kernel::p ? e_kernel((n - 2 * g.m * g.rho) * g.sq) : (k >= 0 ? 1.0 : -1.0);
    acc += double(sign_pow(sign, k)) * coeff * std::exp(gauss_phase(n, g.m, tau, arg.w));
  }
  return acc;
}

}  // namespace

cplx p_num(Sign sign, const RArgument& arg, cplx tau, long half_width) {
  return windowed(Kernel::p, sign, arg, tau, half_width);
}

cplx q_num(Sign sign, const RArgument& arg, cplx tau, long half_width) {
  return windowed(Kernel::q, sign, arg, tau, half_width);
}

Bilateral kernel_terms(Kernel which, Sign sign, const HalfInt& j, const HalfInt& m, const QExp& a, const QExp& b,
                       double tau_im, const QExp& window) {
  if (!m.positive()) throw ParamDomain("m must be positive");
  const QExp mm = m.value(), jj = j.value();
  const QExp mid = 2 * mm * a;
  // k range covering |j + 2mk - 2ma| <= window
  const long klo = static_cast<long>(std::floor(QExp((mid - window - jj) / (2 * mm)).get_d())) - 1;
  const long khi = static_cast<long>(std::ceil(QExp((mid + window - jj) / (2 * mm)).get_d())) + 1;
  const double sq = std::sqrt(tau_im / mm.get_d());
  Bilateral out;
  for (long k = klo; k <= khi; ++k) {
    const QExp n = jj + 2 * mm * k;
    const QExp dist = n - mid;
    if (abs(dist) > window) continue;
    double coeff = 0;
    const double sg = k >= 0 ? 1.0 : -1.0;
    const double E = e_kernel(dist.get_d() * sq);
    switch (which) {
      case Kernel::r: coeff = sg - E; break;
      case Kernel::p: coeff = E; break;
      case Kernel::q: coeff = sg; break;
    }
    // e^{2 pi i n b}, reduced mod 1 exactly
    QExp frac = n * b;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), frac.get_num_mpz_t(), frac.get_den_mpz_t());
    frac -= fl;
    const cplx phase = std::exp(2.0 * pi * I * frac.get_d());
    const QExp ex = -n * (n - 4 * mm * a) / (4 * mm);
    out[ex] += double(sign_pow(sign, k)) * coeff * phase;
  }
  return out;
}

void bilateral_add(Bilateral& acc, const Bilateral& x, cplx scale) {
  for (const auto& [e, c] : x) acc[e] += scale * c;
}

double bilateral_max_abs(const Bilateral& x) {
  double r = 0;
  for (const auto& [e, c] : x) r = std::max(r, std::abs(c));
  return r;
}

cplx phi_add_num(Sign sign, const HalfInt& m, const HalfInt& s, PhiPart part, const EvalPoint& pt,
                 const NumericParams& np, std::optional<QExp> w_ratio) {
  if (!m.positive()) throw ParamDomain("m must be positive");
  const cplx w = (pt.z1 - pt.z2) / 2.0;
  const cplx zs = pt.z1 + pt.z2;
  cplx acc = 0;
  for (HalfInt k = s; k < s + m.times(2); k = k + HalfInt(1)) {
    RArgument arg = RArgument::generic(k, m, w);
    if (w_ratio) arg.a = *w_ratio;
    const cplx r = r_num(sign, arg, pt.tau, np);
    cplx th;
    switch (part) {
      case PhiPart::one: th = theta_num(sign, k, m, pt.tau, zs, np); break;
      case PhiPart::two: th = theta_num(sign, -k, m, pt.tau, zs, np); break;
      default: th = theta_diff(sign, k, m, pt.tau, zs, np);
    }
    acc += r * th;
  }
  return -0.5 * std::exp(-2.0 * pi * I * m.to_double() * pt.t) * acc;
}

cplx phi_tilde_num(Sign sign, const HalfInt& m, const HalfInt& s, PhiPart part, const EvalPoint& pt,
                   const NumericParams& np, std::optional<QExp> w_ratio) {
  return phi_num(sign, m, s, part, pt, np) + phi_add_num(sign, m, s, part, pt, np, w_ratio);
}

}  // namespace mocktheta
