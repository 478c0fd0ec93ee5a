#include "mocktheta/errors.hpp"
#include "mocktheta/special_series.hpp"

#include <doctest.h>

#include <random>

using namespace mocktheta;

namespace {

const HalfInt h = HalfInt::from_twice(1);

bool eq(const FormalSeries& a, const FormalSeries& b, const QExp& o) { return series_equal_to_order(a, b, o).equal; }

FormalSeries from_int_coeffs(const QExp& shift, const std::vector<long>& cs, const QExp& order) {
  FormalSeries s(order);
  for (std::size_t n = 0; n < cs.size(); ++n) s.add_term(shift + long(n), GaussRat(cs[n]));
  return s;
}

// prod_{n>=1} (1 - x^n) by repeated multiplication of integer coefficient arrays, length N
std::vector<long> euler_product(int N) {
  std::vector<long> c(N, 0);
  c[0] = 1;
  for (int n = 1; n < N; ++n)
    for (int k = N - 1; k >= n; --k) c[k] -= c[k - n];
  return c;
}

// Plain double loop over a box, independent of the builder's bound.
FormalSeries bracket_oracle(const BracketSumSpec& s, const QExp& order) {
  FormalSeries out(order);
  for (long j = -60; j <= 60; ++j)
    for (long r = -60; r <= 60; ++r) {
      int w = 0;
      switch (s.variant) {
        case BracketVariant::half_open: w = (0 <= r && r < j) ? 1 : ((j <= r && r < 0) ? -1 : 0); break;
        case BracketVariant::closed: w = (0 <= r && r <= j) ? 1 : ((j < r && r < 0) ? -1 : 0); break;
        case BracketVariant::shifted: w = (0 < r && r <= j) ? 1 : ((j < r && r <= 0) ? -1 : 0); break;
      }
      if (w == 0) continue;
      const QExp e = s.alpha * (j + s.c) * (j + s.c) - s.beta * (r + s.d) * (r + s.d);
      long ph = 1;
      if (s.phase == BracketPhase::minus_one_pow_j) ph = (j & 1) ? -1 : 1;
      if (s.phase == BracketPhase::minus_one_pow_r) ph = (r & 1) ? -1 : 1;
      out.add_term(e, s.prefactor * GaussRat(w * ph));
    }
  return out;
}

}  // namespace

TEST_CASE("eta series small cases") {
  const auto e = eta_series(1, 3);
  CHECK(e == from_int_coeffs(frac(1, 24), {1, -1, -1}, 3));
  const auto e2 = eta_series(2, frac(1, 2));
  REQUIRE(e2.terms().size() == 1);
  CHECK(e2.coeff(frac(1, 12)) == GaussRat(1));
  CHECK(eta_series(frac(1, 2), 2).valuation() == frac(1, 48));
  CHECK_THROWS_AS(eta_series(0, 3), ParamDomain);
}

TEST_CASE("eta series agrees with the product expanded by brute force") {
  const auto c = euler_product(60);
  CHECK(eq(eta_series(1, 60), from_int_coeffs(frac(1, 24), c, 60), 60));
  // eta(tau/2): exponents halve
  FormalSeries half(30);
  for (int n = 0; n < 60; ++n) half.add_term(frac(1, 48) + frac(n, 2), GaussRat(c[n]));
  CHECK(eq(eta_series(frac(1, 2), 30), half, 30));
}

TEST_CASE("eta coefficients are pentagonally sparse") {
  for (const QExp scale : {QExp(1), frac(1, 2), QExp(2)}) {
    const auto e = eta_series(scale, 50);
    for (const auto& [x, c] : e.terms()) {
      CHECK(sgn(c.im) == 0);
      CHECK((c.re == 1 || c.re == -1));
    }
  }
}

TEST_CASE("eta quotients") {
  const auto a = eta_quotient_series(EtaSpec{{{1, 2}, {frac(1, 2), -1}}}, 10);
  CHECK(a.valuation() == frac(1, 16));
  CHECK(a.coeff(frac(1, 16)) == GaussRat(1));
  // eta eta(2tau) against the product of two brute-force Euler products
  const auto e = euler_product(40);
  std::vector<long> prod(40, 0);
  for (int a = 0; a < 40; ++a)
    for (int b2 = 0; 2 * b2 + a < 40; ++b2) prod[a + 2 * b2] += e[a] * e[b2];
  const auto b = eta_quotient_series(EtaSpec{{{1, 1}, {2, 1}}}, frac(313, 8));
  CHECK(b == from_int_coeffs(frac(1, 8), prod, frac(313, 8)));
  CHECK(b.truncated(frac(81, 8)) == from_int_coeffs(frac(1, 8), {1, -1, -2, 1, 0, 2, 1, 0, 0, -2}, frac(81, 8)));
  const auto one = eta_quotient_series(EtaSpec{{{1, 1}, {1, -1}}}, 10);
  CHECK(one == FormalSeries::one(10));
  CHECK_THROWS_AS(eta_quotient_series(EtaSpec{}, 10), ParamDomain);
}

TEST_CASE("theta nullwert examples") {
  const auto t = theta_nullwert_series(h, 1, Sign::plus, 3);
  CHECK(t.valuation() == frac(1, 16));
  CHECK(t.coeff(frac(1, 16)) == GaussRat(1));
  CHECK(t.coeff(frac(9, 16)) == GaussRat(1));
  CHECK(t.coeff(frac(25, 16)) == GaussRat(1));
  CHECK(t.coeff(frac(49, 16)) == GaussRat(0));
  CHECK(t.terms().size() == 3);
  const auto tm = theta_nullwert_series(0, h, Sign::minus, 5);
  CHECK(tm == from_int_coeffs(0, {1}, 5) + FormalSeries::monomial(GaussRat(-2), frac(1, 2), 5) +
                   FormalSeries::monomial(GaussRat(2), 2, 5) + FormalSeries::monomial(GaussRat(-2), frac(9, 2), 5));
  CHECK_THROWS_AS(theta_nullwert_series(h, 0, Sign::plus, 3), ParamDomain);
}

TEST_CASE("theta nullwert coefficients are integers of the right sign") {
  for (long tj = -5; tj <= 5; ++tj)
    for (long tm = 1; tm <= 5; ++tm)
      for (Sign s : {Sign::plus, Sign::minus}) {
        const auto t = theta_nullwert_series(HalfInt::from_twice(tj), HalfInt::from_twice(tm), s, 20);
        for (const auto& [x, c] : t.terms()) {
          CHECK(c.re.get_den() == 1);
          CHECK(sgn(c.im) == 0);
          if (s == Sign::plus) CHECK(sgn(c.re) > 0);
        }
      }
}

TEST_CASE("theta nullwert matches eta quotients") {
  const QExp o = 20;
  CHECK(eq(theta_nullwert_series(h, 1, Sign::plus, o), eta_quotient_series(EtaSpec{{{1, 2}, {frac(1, 2), -1}}}, o), o));
  CHECK(eq(theta_nullwert_series(h, 1, Sign::minus, o),
           eta_quotient_series(EtaSpec{{{frac(1, 2), 1}, {2, 1}, {1, -1}}}, o), o));
}

TEST_CASE("bracket sums agree with a brute-force box enumeration") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> num(-6, 6), pos(1, 8), den(1, 4), half_den(2, 4), ord(1, 10), pick(0, 2);
  for (int trial = 0; trial < 20; ++trial) {
    BracketSumSpec s;
    s.beta = frac(pos(rng), den(rng));
    // alpha >= 5/4 beta and |c|, |d| <= 3 keep every term below order 10 inside the +-60 box
    s.alpha = s.beta * (1 + frac(pos(rng), 4));
    s.c = frac(num(rng), half_den(rng));
    s.d = frac(num(rng), half_den(rng));
    s.phase = BracketPhase(pick(rng));
    s.variant = BracketVariant(pick(rng));
    s.prefactor = GaussRat(num(rng) == 0 ? 1 : num(rng), num(rng));
    if (s.prefactor.is_zero()) s.prefactor = GaussRat(1);
    const QExp order = ord(rng);
    INFO("trial " << trial);
    CHECK(bracket_sum_series(s, order) == bracket_oracle(s, order));
  }
}

TEST_CASE("bracket sum edge cases") {
  BracketSumSpec s{1, frac(1, 2), frac(1, 2), frac(1, 2), BracketPhase::minus_one_pow_j, BracketVariant::shifted};
  // smallest exponent is 1/8 at j = 0, r = 0
  const auto tiny = bracket_sum_series(s, frac(1, 8));
  CHECK(tiny.is_zero());
  CHECK(bracket_sum_series(s, frac(1, 8) + frac(1, 100)).terms().size() == 1);
  CHECK(eq(bracket_sum_series(s, 20), eta_quotient_series(EtaSpec{{{1, 1}, {2, 1}}}, 20), 20));
  s.alpha = s.beta;
  CHECK_THROWS_AS(bracket_sum_series(s, 5), NonTerminating);
  s.alpha = 1;
  s.beta = 0;
  CHECK_THROWS_AS(bracket_sum_series(s, 5), NonTerminating);
}

TEST_CASE("family index validation") {
  CHECK_THROWS_AS(GFamilyIndex(4, h, 0, h), ParamDomain);
  CHECK_THROWS_AS(GFamilyIndex(1, HalfInt(1), 0, h), ParamDomain);
  CHECK_THROWS_AS(GFamilyIndex(1, h, 2, h), ParamDomain);
  CHECK_THROWS_AS(GFamilyIndex(1, h, -1, h), ParamDomain);
  CHECK_THROWS_AS(GFamilyIndex(1, HalfInt::from_twice(3), 0, HalfInt::from_twice(5)), ParamDomain);
  CHECK_NOTHROW(GFamilyIndex(3, HalfInt::from_twice(3), 3, HalfInt::from_twice(3)));
  CHECK(odd_half_range(HalfInt::from_twice(5)) ==
        std::vector<HalfInt>{HalfInt::from_twice(1), HalfInt::from_twice(3), HalfInt::from_twice(5)});
}

TEST_CASE("g series examples") {
  for (long tm : {1, 3, 5}) {
    const HalfInt m = HalfInt::from_twice(tm);
    CHECK(g_series(GFamilyIndex(3, m, 0, m), 20).is_zero());
  }
  const auto g3 = g_series(GFamilyIndex(3, h, 1, h), 20);
  CHECK(g3.valuation() == frac(1, 8));
  CHECK(g3.coeff(frac(1, 8)) == GaussRat(0, 1));
  CHECK(eq(g_series(GFamilyIndex(1, h, 1, h), 20), g_series(GFamilyIndex(1, h, 0, h), 20), 20));
  CHECK(eq(g_series(GFamilyIndex(2, h, 1, h), 20), -g_series(GFamilyIndex(2, h, 0, h), 20), 20));
}

TEST_CASE("g series for k < m have finite exact expansions") {
  const HalfInt m = HalfInt::from_twice(3);
  for (int i = 1; i <= 3; ++i)
    for (long p = 0; p <= 3; ++p) {
      const auto g = g_series(GFamilyIndex(i, m, p, h), 15);
      CHECK(g.order() == 15);
      for (const auto& [x, c] : g.terms()) CHECK(c.re.get_den() <= 2);
    }
}

TEST_CASE("tilde g leading terms") {
  for (int n : {1, 2}) {
    const auto g = gtilde_series(n, 20);
    CHECK(g.valuation() == frac(1, 16));
    CHECK(g.coeff(frac(1, 16)) == GaussRat(frac(1, 2)));
  }
  const auto g3 = gtilde_series(3, 20);
  CHECK(g3.valuation() == frac(1, 8));
  CHECK(g3.coeff(frac(1, 8)) == GaussRat(1));
  for (int n = 1; n <= 3; ++n) {
    const auto g = gtilde_series(n, 20);
    for (const auto& [x, c] : g.terms()) CHECK(sgn(c.im) == 0);
  }
  CHECK_THROWS_AS(gtilde_series(4, 20), ParamDomain);
}

TEST_CASE("tilde g against eta quotients") {
  const QExp o = 20;
  CHECK(eq(gtilde_series(1, o), eta_quotient_series(EtaSpec{{{1, 4}, {frac(1, 2), -1}, {2, -1}}}, o).scaled(GaussRat(frac(1, 2))), o));
  CHECK(eq(gtilde_series(2, o), eta_quotient_series(EtaSpec{{{1, 1}, {frac(1, 2), 1}}}, o).scaled(GaussRat(frac(1, 2))), o));
  CHECK(eq(gtilde_series(3, o), eta_quotient_series(EtaSpec{{{1, 1}, {2, 1}}}, o), o));
}

TEST_CASE("nullwert times a Laurent polynomial") {
  FormalSeries poly(20);
  poly.add_term(-2, GaussRat(1));
  const auto prod = nullwert_times(h, 1, Sign::plus, poly, 5);
  CHECK(prod.order() == 5);
  CHECK(eq(prod, theta_nullwert_series(h, 1, Sign::plus, 7).shifted(-2), 5));
  CHECK(nullwert_times(h, 1, Sign::plus, FormalSeries(20), 5).is_zero());
}
