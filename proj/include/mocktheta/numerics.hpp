#pragma once

#include "mocktheta/errors.hpp"
#include "mocktheta/halfint.hpp"
#include "mocktheta/qseries.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <optional>

namespace mocktheta {

inline constexpr double pi = std::numbers::pi;
inline const cplx I{0.0, 1.0};

struct NumericParams {
  double tol_abs = 1e-10;
  long max_terms = 4000;
  double pole_guard = 1e-8;
  int consecutive_small = 3;

  void validate() const;
  double small() const { return tol_abs * 1e-3; }
};

struct EvalPoint {
  cplx tau;
  cplx z1{0.0};
  cplx z2{0.0};
  cplx t{0.0};

  EvalPoint(cplx tau_, cplx z1_ = 0.0, cplx z2_ = 0.0, cplx t_ = 0.0);
  const cplx& z() const { return z1; }
};

// e^{2 pi i x}
inline cplx e(cplx x) { return std::exp(2.0 * pi * I * x); }
inline cplx qpow(cplx tau, double x) { return std::exp(2.0 * pi * I * tau * x); }
inline cplx sqrt_minus_i_tau(cplx tau) { return std::sqrt(-I * tau); }

double e_kernel(double x);
// log(erfc(x)) without underflow for large x.
double log_erfc(double x);

cplx theta_num(Sign sign, const HalfInt& j, const HalfInt& m, cplx tau, cplx z, const NumericParams& np = {});
cplx eta_num(const QExp& scale, cplx tau);
cplx eta_num(double scale, cplx tau);
// Mumford thetas from their own lattice sums; ab in {11, 00, 01, 10}.
cplx mumford_theta(int ab, cplx tau, cplx z, const NumericParams& np = {});

enum class PhiPart { one, two, full };

cplx phi_num(Sign sign, const HalfInt& m, const HalfInt& s, PhiPart part, const EvalPoint& pt, const NumericParams& np = {});

struct RArgument {
  HalfInt j;
  HalfInt m;
  cplx w;
  std::optional<QExp> a;
  std::optional<QExp> b;

  static RArgument generic(HalfInt j, HalfInt m, cplx w) { return {std::move(j), std::move(m), w, {}, {}}; }
  static RArgument exact(HalfInt j, HalfInt m, const QExp& a, const QExp& b, cplx tau);
  double im_ratio(cplx tau) const { return a ? a->get_d() : w.imag() / tau.imag(); }
};

cplx r_num(Sign sign, const RArgument& arg, cplx tau, const NumericParams& np = {});
// P and Q diverge separately for Im tau > 0; these are windowed partial sums over
// |k - k_center| <= half_width, meaningful only as truncations.
cplx p_num(Sign sign, const RArgument& arg, cplx tau, long half_width);
cplx q_num(Sign sign, const RArgument& arg, cplx tau, long half_width);

// Bilateral q-expansions at w = a tau + b: exponent of q -> coefficient, over
// lattice points n = j + 2mk with |n - 2ma| <= window.
using Bilateral = std::map<QExp, cplx>;
enum class Kernel { r, p, q };
Bilateral kernel_terms(Kernel which, Sign sign, const HalfInt& j, const HalfInt& m, const QExp& a, const QExp& b,
                       double tau_im, const QExp& window);
void bilateral_add(Bilateral& acc, const Bilateral& x, cplx scale = 1.0);
double bilateral_max_abs(const Bilateral& x);

// w = (z1 - z2)/2; pass the exact a when w = a tau + b.
cplx phi_add_num(Sign sign, const HalfInt& m, const HalfInt& s, PhiPart part, const EvalPoint& pt,
                 const NumericParams& np = {}, std::optional<QExp> w_ratio = {});
cplx phi_tilde_num(Sign sign, const HalfInt& m, const HalfInt& s, PhiPart part, const EvalPoint& pt,
                   const NumericParams& np = {}, std::optional<QExp> w_ratio = {});

cplx psi_num(int i, const HalfInt& m, cplx tau, cplx z, const NumericParams& np = {});
cplx xi_num(int i, const HalfInt& m, long p, cplx tau, cplx z, const NumericParams& np = {});
cplx upsilon_num(int i, const HalfInt& m, long p, cplx tau, cplx z, const NumericParams& np = {});
cplx G_num(int i, const HalfInt& m, long p, cplx tau, cplx z, const NumericParams& np = {});

// theta^{(-)}_{k,m} - theta^{(-)}_{-k,m}
cplx theta_diff(Sign sign, const HalfInt& k, const HalfInt& m, cplx tau, cplx z, const NumericParams& np = {});

void check_odd_half_m(const HalfInt& m);
void check_p_range(const HalfInt& m, long p);

namespace detail {

// Symmetric pairwise accumulation around center until consecutive_small
// pairs fall below np.small(), with at least min_radius pairs.
template <class Term>
cplx sum_lattice(Term&& term, long center, long min_radius, const NumericParams& np, const char* what) {
  cplx acc = term(center);
  int quiet = 0;
  const double thr = np.small();
  for (long d = 1;; ++d) {
    if (2 * d + 1 > np.max_terms) throw BudgetExceeded(std::string(what) + ": term budget exhausted");
    const cplx up = term(center + d);
    const cplx down = term(center - d);
    acc += up + down;
    if (d < min_radius) continue;
    if (std::abs(up) < thr && std::abs(down) < thr) {
      if (++quiet >= np.consecutive_small) break;
    } else {
      quiet = 0;
    }
  }
  return acc;
}

inline long round_to_long(double x) { return static_cast<long>(std::lround(x)); }

}  // namespace detail

}  // namespace mocktheta
