#pragma once

#include "mocktheta/qseries.hpp"

#include <vector>

namespace mocktheta {

struct EtaFactor {
  QExp scale;
  long exponent;
};

struct EtaSpec {
  std::vector<EtaFactor> factors;
};

enum class BracketPhase { minus_one_pow_j, minus_one_pow_r, plus };

// First region enters with +, second with -.
//   half_open: 0 <= r < j   and  j <= r < 0
//   closed:    0 <= r <= j  and  j < r < 0
//   shifted:   0 < r <= j   and  j < r <= 0
enum class BracketVariant { half_open, closed, shifted };

struct BracketSumSpec {
  QExp alpha;
  QExp c;
  QExp beta;
  QExp d;
  BracketPhase phase = BracketPhase::plus;
  BracketVariant variant = BracketVariant::half_open;
  GaussRat prefactor{1};
};

struct GFamilyIndex {
  int i;
  HalfInt m;
  long p;
  HalfInt k;

  GFamilyIndex(int i, HalfInt m, long p, HalfInt k);
};

FormalSeries eta_series(const QExp& scale, const QExp& order);
FormalSeries eta_quotient_series(const EtaSpec& spec, const QExp& order);
FormalSeries theta_nullwert_series(const HalfInt& j, const HalfInt& m, Sign sign, const QExp& order);
FormalSeries bracket_sum_series(const BracketSumSpec& spec, const QExp& order);
// theta_{j,m}(tau,0) times a finite Laurent polynomial in q, extended far enough to be exact below order.
FormalSeries nullwert_times(const HalfInt& j, const HalfInt& m, Sign sign, const FormalSeries& poly, const QExp& order);
FormalSeries g_series(const GFamilyIndex& idx, const QExp& order);
FormalSeries gtilde_series(int n, const QExp& order);

// Half-odd k with 0 < k <= m, ascending.
std::vector<HalfInt> odd_half_range(const HalfInt& m);

}  // namespace mocktheta
