#pragma once

#include "mocktheta/special_series.hpp"
#include "mocktheta/verify.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace mocktheta::checks {

void add_theta(std::vector<CheckInfo>& reg);
void add_phi(std::vector<CheckInfo>& reg);
void add_sec3(std::vector<CheckInfo>& reg);
void add_kernel(std::vector<CheckInfo>& reg);
void add_completion(std::vector<CheckInfo>& reg);
void add_g(std::vector<CheckInfo>& reg);
void add_exact(std::vector<CheckInfo>& reg);

// Shared pieces of the three-case decomposition of Phi^{(-)[m,1/2]} (i = 1, 2, 3):
// the finite theta corrections equal to Phi_add, the nullwert prefactor, and the
// right-hand side with its bracket sums.
cplx add_corrections(int part, const HalfInt& m, cplx tau, cplx z, const NumericParams& np);
cplx decomposition_prefactor(int part, const HalfInt& m, long p, cplx tau);
// Exact coefficient series of [theta_k - theta_-k], 0 < k <= m, on the right of the decomposition.
std::vector<FormalSeries> decomposition_coefficients(int part, const HalfInt& m, long p, const QExp& order);
cplx decomposition_rhs(int part, const HalfInt& m, long p, cplx tau, cplx z, const std::vector<FormalSeries>& coef,
                       const NumericParams& np);

inline HalfInt hf(long twice) { return HalfInt::from_twice(twice); }
inline const HalfInt& half() {
  static const HalfInt h = hf(1);
  return h;
}

inline std::string fmt_c(cplx c) {
  std::ostringstream os;
  os << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i";
  return os.str();
}

// "m=3/2 p=1 tau=..." style labels
template <class... Parts>
std::string label(Parts&&... parts) {
  std::ostringstream os;
  ((os << parts), ...);
  return os.str();
}

inline std::string at(const EvalPoint& pt) { return " tau=" + fmt_c(pt.tau) + " z=" + fmt_c(pt.z1); }
inline std::string at2(const EvalPoint& pt) { return at(pt) + " z2=" + fmt_c(pt.z2); }

inline const char* sgn_name(Sign s) { return s == Sign::plus ? "+" : "-"; }

// e^{pi i x}
inline cplx epi(double x) { return std::exp(pi * I * x); }

// Sum over shells |j| = J; shell(J) returns (sum, sum of moduli). Stops after
// consecutive_small quiet shells past min_shell.
template <class Shell>
cplx sum_shells(Shell&& shell, long first, long min_shell, const NumericParams& np, const char* what) {
  cplx acc = 0;
  int quiet = 0;
  for (long J = first;; ++J) {
    if (J - first > np.max_terms) throw BudgetExceeded(std::string(what) + ": shell budget exhausted");
    auto [s, mag] = shell(J);
    acc += s;
    if (J < min_shell) continue;
    if (mag < np.small()) {
      if (++quiet >= np.consecutive_small) break;
    } else {
      quiet = 0;
    }
  }
  return acc;
}

// Two-region lattice sum over (j, r) for the given variant, first region minus second.
template <class Term>
cplx bracket_num(BracketVariant v, Term&& term, const NumericParams& np) {
  auto in_first = [v](long j, long r) {
    switch (v) {
      case BracketVariant::half_open: return 0 <= r && r < j;
      case BracketVariant::closed: return 0 <= r && r <= j;
      default: return 0 < r && r <= j;
    }
  };
  auto in_second = [v](long j, long r) {
    switch (v) {
      case BracketVariant::half_open: return j <= r && r < 0;
      case BracketVariant::closed: return j < r && r < 0;
      default: return j < r && r <= 0;
    }
  };
  auto shell = [&](long J) {
    cplx s = 0;
    double mag = 0;
    for (int side = 0; side < (J == 0 ? 1 : 2); ++side) {
      const long j = side ? -J : J;
      for (long r = std::min(0L, j) - 1; r <= std::max(0L, j) + 1; ++r) {
        int w = in_first(j, r) ? 1 : (in_second(j, r) ? -1 : 0);
        if (w == 0) continue;
        cplx t = term(j, r);
        s += double(w) * t;
        mag += std::abs(t);
      }
    }
    return std::pair<cplx, double>{s, mag};
  };
  return sum_shells(shell, 0, 3, np, "bracket sum");
}

// Sum over j in Z of term(j), pairwise from 0.
template <class Term>
cplx line_num(Term&& term, const NumericParams& np) {
  auto shell = [&](long J) {
    if (J == 0) {
      cplx t = term(0);
      return std::pair<cplx, double>{t, std::abs(t)};
    }
    cplx a = term(J), b = term(-J);
    return std::pair<cplx, double>{a + b, std::abs(a) + std::abs(b)};
  };
  return sum_shells(shell, 0, 3, np, "line sum");
}

inline std::vector<long> p_values(const HalfInt& m) {
  std::vector<long> ps;
  for (long p = 0; p <= m.twice_long(); ++p) ps.push_back(p);
  return ps;
}

// Half-odd k with 0 < k < m.
inline std::vector<HalfInt> k_below(const HalfInt& m) {
  std::vector<HalfInt> out;
  for (const auto& k : odd_half_range(m))
    if (k < m) out.push_back(k);
  return out;
}

}  // namespace mocktheta::checks
