#pragma once

#include "mocktheta/halfint.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace mocktheta {

using cplx = std::complex<double>;

struct GaussRat {
  mpq_class re{0};
  mpq_class im{0};

  GaussRat() = default;
  GaussRat(long r) : re(r) {}
  GaussRat(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat i_pow(long k);
  // e^{pi i k} for k in Z/2, i.e. i^{2k}.
  static GaussRat exp_pi_i(const HalfInt& k) { return i_pow(mpz_class(k.twice() % 4).get_si()); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  cplx to_complex() const { return {re.get_d(), im.get_d()}; }
  GaussRat conj() const { return {re, -im}; }

  GaussRat operator-() const { return {-re, -im}; }
  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b);
  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
};

std::string to_string(const GaussRat& c);

class FormalSeries {
 public:
  using Terms = std::map<QExp, GaussRat>;

  explicit FormalSeries(QExp order = 0) : order_(std::move(order)) {}
  static FormalSeries monomial(const GaussRat& c, const QExp& e, const QExp& order);
  static FormalSeries one(const QExp& order) { return monomial(GaussRat(1), 0, order); }

  const Terms& terms() const { return terms_; }
  const QExp& order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }
  QExp valuation() const { return terms_.empty() ? order_ : terms_.begin()->first; }
  GaussRat coeff(const QExp& e) const;

  // Accumulates c*q^e; ignored when e >= order.
  void add_term(const QExp& e, const GaussRat& c);
  FormalSeries truncated(const QExp& order) const;
  FormalSeries scaled(const GaussRat& c) const;
  FormalSeries shifted(const QExp& e) const;

  FormalSeries operator-() const { return scaled(GaussRat(-1)); }
  friend bool operator==(const FormalSeries& a, const FormalSeries& b) {
    return a.order_ == b.order_ && a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
  QExp order_;
};

FormalSeries series_add(const FormalSeries& a, const FormalSeries& b);
FormalSeries series_sub(const FormalSeries& a, const FormalSeries& b);
FormalSeries series_mul(const FormalSeries& a, const FormalSeries& b);
FormalSeries series_invert(const FormalSeries& a);
FormalSeries series_pow(const FormalSeries& a, long n);

inline FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) { return series_add(a, b); }
inline FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) { return series_sub(a, b); }
inline FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) { return series_mul(a, b); }

struct EqualityReport {
  bool equal = true;
  QExp order;
  std::vector<QExp> differences;
};

EqualityReport series_equal_to_order(const FormalSeries& a, const FormalSeries& b, const QExp& order);

struct SeriesValue {
  cplx value;
  double tail;
};

SeriesValue series_eval(const FormalSeries& a, cplx tau);

std::string series_to_json(const FormalSeries& a, int indent = -1);
FormalSeries series_from_json(const std::string& text);
std::string series_to_text(const FormalSeries& a, std::size_t max_terms = 12);

}  // namespace mocktheta
