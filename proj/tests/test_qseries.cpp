#include "mocktheta/errors.hpp"
#include "mocktheta/qseries.hpp"

#include <doctest.h>

#include <random>

using namespace mocktheta;

namespace {

FormalSeries poly(std::initializer_list<std::pair<QExp, long>> terms, const QExp& order) {
  FormalSeries s(order);
  for (const auto& [e, c] : terms) s.add_term(e, GaussRat(c));
  return s;
}

// Random series on the lattice (1/6)Z with small Gaussian-rational coefficients.
FormalSeries random_series(std::mt19937& rng, bool unit_lead) {
  std::uniform_int_distribution<int> coef(-5, 5), den(1, 4), len(1, 8), step(1, 6);
  const QExp order = frac(std::uniform_int_distribution<int>(24, 48)(rng), 6);
  FormalSeries s(order);
  QExp e = frac(std::uniform_int_distribution<int>(-3, 3)(rng), 6);
  const int n = len(rng);
  for (int k = 0; k < n && e < order; ++k) {
    GaussRat c(frac(coef(rng), den(rng)), frac(coef(rng), den(rng)));
    if (k == 0 && (unit_lead || c.is_zero())) c = GaussRat(1 + std::abs(coef(rng)), coef(rng));
    s.add_term(e, c);
    e += frac(step(rng), 6);
  }
  return s;
}

bool same(const FormalSeries& a, const FormalSeries& b) {
  const QExp o = std::min(a.order(), b.order());
  return series_equal_to_order(a, b, o).equal;
}

}  // namespace

TEST_CASE("addition and multiplication of small polynomials") {
  const auto a = poly({{0, 1}, {1, 1}}, 10);
  const auto b = poly({{0, 1}, {1, -1}}, 10);
  const auto s = a + b;
  CHECK(s.order() == 10);
  CHECK(s.coeff(0) == GaussRat(2));
  CHECK(s.coeff(1).is_zero());
  const auto p = a * b;
  CHECK(p.order() == 10);
  CHECK(p.coeff(0) == GaussRat(1));
  CHECK(p.coeff(1).is_zero());
  CHECK(p.coeff(2) == GaussRat(-1));
  CHECK(p.terms().size() == 2);
}

TEST_CASE("order propagates through products") {
  const auto a = poly({{frac(1, 24), 1}}, 5);
  const auto b = poly({{2, 3}}, 7);
  const auto p = a * b;
  CHECK(p.order() == std::min(QExp(QExp(5) + 2), QExp(QExp(7) + frac(1, 24))));
  CHECK(p.coeff(QExp(2) + frac(1, 24)) == GaussRat(3));
  CHECK((a + b).order() == 5);
}

TEST_CASE("1/(1-q) is the geometric series") {
  const auto inv = series_invert(poly({{0, 1}, {1, -1}}, 12));
  CHECK(inv.order() == 12);
  for (int n = 0; n < 12; ++n) CHECK(inv.coeff(n) == GaussRat(1));
  CHECK(inv.terms().size() == 12);
}

TEST_CASE("inverting a series with positive valuation shifts the exponent") {
  const auto a = poly({{frac(1, 8), 2}, {frac(9, 8), 2}}, 6);
  const auto inv = series_invert(a);
  CHECK(inv.valuation() == -frac(1, 8));
  CHECK(inv.coeff(-frac(1, 8)) == GaussRat(frac(1, 2)));
  CHECK(inv.coeff(QExp(1) - frac(1, 8)) == GaussRat(frac(-1, 2)));
  CHECK(same(a * inv, FormalSeries::one(inv.order())));
}

TEST_CASE("zero series has no inverse") {
  CHECK_THROWS_AS(series_invert(FormalSeries(10)), ZeroLeadingTerm);
  // a term at or above the order is dropped, leaving nothing to invert
  CHECK_THROWS_AS(series_invert(poly({{10, 1}}, 10)), ZeroLeadingTerm);
}

TEST_CASE("fractional exponents stay exact") {
  const auto q48 = FormalSeries::monomial(GaussRat(1), frac(1, 48), 10);
  const auto p = series_pow(q48, 48);
  REQUIRE(p.terms().size() == 1);
  CHECK(p.coeff(1) == GaussRat(1));
  CHECK(series_pow(q48, 0).coeff(0) == GaussRat(1));
  const auto neg = series_pow(poly({{0, 1}, {1, -1}}, 8), -2);
  for (int n = 0; n < 8; ++n) CHECK(neg.coeff(n) == GaussRat(n + 1));
}

TEST_CASE("Gaussian coefficients") {
  CHECK(GaussRat::i_pow(1) * GaussRat::i_pow(1) == GaussRat(-1));
  CHECK(GaussRat::i_pow(-1) == GaussRat(0, -1));
  CHECK(GaussRat::exp_pi_i(HalfInt::from_twice(1)) == GaussRat(0, 1));
  CHECK(GaussRat::exp_pi_i(HalfInt(1)) == GaussRat(-1));
  const GaussRat z(frac(3, 2), frac(-1, 3));
  CHECK(z / z == GaussRat(1));
  CHECK(to_string(GaussRat(0, 2)) == "2i");
}

TEST_CASE("ring laws on random series") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_series(rng, false), b = random_series(rng, false), c = random_series(rng, false);
    CHECK(same(a + b, b + a));
    CHECK(same((a + b) + c, a + (b + c)));
    CHECK(same(a * b, b * a));
    CHECK(same((a * b) * c, a * (b * c)));
    CHECK(same(a * (b + c), a * b + a * c));
    CHECK(same(a - a, FormalSeries(a.order())));
    CHECK(same(a * FormalSeries::one(40), a));
  }
}

TEST_CASE("invert is a two-sided inverse on random series") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_series(rng, trial % 2 == 0);
    const auto inv = series_invert(a);
    const auto one = FormalSeries::one(inv.order());
    CHECK(same(a * inv, one));
    CHECK(same(inv * a, one));
    CHECK(same(series_invert(inv), a));
  }
}

TEST_CASE("evaluation") {
  const cplx tau{0.1, 1.1};
  const auto geo = series_invert(poly({{0, 1}, {1, -1}}, 60));
  const cplx q = std::exp(2.0 * std::numbers::pi * cplx(0, 1) * tau);
  const auto v = series_eval(geo, tau);
  CHECK(std::abs(v.value - 1.0 / (1.0 - q)) < 1e-12);
  CHECK(v.tail < 1e-12);
  CHECK(std::abs(series_eval(FormalSeries::monomial(GaussRat(0, 1), frac(1, 2), 5), tau).value -
                 cplx(0, 1) * std::sqrt(q)) < 1e-14);
  CHECK_THROWS(series_eval(geo, cplx(0.1, 0.0)));
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(99);
  const cplx tau{0.1, 1.1};
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_series(rng, false), b = random_series(rng, false);
    const cplx va = series_eval(a, tau).value, vb = series_eval(b, tau).value;
    // products truncate, so only polynomial inputs whose product is untruncated compare exactly
    FormalSeries pa = a.truncated(a.order()), pb = b.truncated(b.order());
    FormalSeries big_a(100), big_b(100);
    for (const auto& [e, c] : pa.terms()) big_a.add_term(e, c);
    for (const auto& [e, c] : pb.terms()) big_b.add_term(e, c);
    CHECK(std::abs(series_eval(big_a * big_b, tau).value - va * vb) < 1e-9 * std::max(1.0, std::abs(va * vb)));
    CHECK(std::abs(series_eval(a + b, tau).value - (va + vb)) < 1e-9 * std::max(1.0, std::abs(va + vb)));
  }
}

TEST_CASE("equality to order") {
  const auto a = poly({{0, 1}, {3, 2}}, 10);
  const auto b = poly({{0, 1}, {3, 5}}, 8);
  auto r = series_equal_to_order(a, b, 2);
  CHECK(r.equal);
  r = series_equal_to_order(a, b, 8);
  CHECK_FALSE(r.equal);
  REQUIRE(r.differences.size() == 1);
  CHECK(r.differences[0] == 3);
  CHECK_THROWS_AS(series_equal_to_order(a, b, 9), InsufficientOrder);
}

TEST_CASE("json round trip") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series(rng, false);
    CHECK(series_from_json(series_to_json(a)) == a);
  }
  const auto s = poly({{frac(1, 8), 1}}, frac(41, 2));
  CHECK(series_to_json(s) == R"({"order":"41/2","terms":[{"exp":"1/8","im":"0/1","re":"1/1"}]})");
  CHECK_THROWS_AS(series_from_json("{\"order\": 1.5, \"terms\": []}"), ParamDomain);
  CHECK_THROWS_AS(series_from_json("not json"), ParamDomain);
}

TEST_CASE("text rendering") {
  const auto s = poly({{0, 1}, {frac(1, 2), -3}}, 4);
  CHECK(series_to_text(s) == "1*q^(0) + -3*q^(1/2) + O(q^(4))");
  CHECK(series_to_text(FormalSeries(3)) == "0 + O(q^(3))");
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("41/2") == frac(41, 2));
  CHECK(parse_rational("-3") == QExp(-3));
  CHECK(parse_rational("4/6") == frac(2, 3));
  CHECK_THROWS_AS(parse_rational("0.5"), ParamDomain);
  CHECK_THROWS_AS(parse_rational("1/0"), ParamDomain);
  CHECK_THROWS_AS(parse_rational(""), ParamDomain);
  CHECK(HalfInt::parse("3/2") == HalfInt::from_twice(3));
  CHECK(HalfInt::parse("-2") == HalfInt(-2));
  CHECK_THROWS_AS(HalfInt::parse("1/3"), ParamDomain);
  CHECK(HalfInt::from_twice(-5).str() == "-5/2");
}
