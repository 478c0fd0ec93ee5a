#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace mocktheta {

using QExp = mpq_class;

// Strict "n" or "n/d" parser; floats and junk are rejected with ParamDomain.
QExp parse_rational(const std::string& text);
std::string to_string(const QExp& q);
double to_double(const QExp& q);
// n/d in lowest terms; gmpxx leaves QExp(n, d) as given.
inline QExp frac(long n, long d) {
  QExp q(n, d);
  q.canonicalize();
  return q;
}

class HalfInt {
 public:
  HalfInt() = default;
  HalfInt(long n) : twice_(2 * n) {}

  static HalfInt from_twice(const mpz_class& t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }
  static HalfInt parse(const std::string& text);
  static HalfInt from_rational(const QExp& q);

  const mpz_class& twice() const { return twice_; }
  long twice_long() const { return twice_.get_si(); }
  bool is_integer() const { return mpz_even_p(twice_.get_mpz_t()) != 0; }
  bool is_odd_half() const { return !is_integer(); }
  bool positive() const { return sgn(twice_) > 0; }

  QExp value() const {
    QExp q(twice_, 2);
    q.canonicalize();
    return q;
  }
  double to_double() const { return twice_.get_d() / 2.0; }
  std::string str() const;

  HalfInt operator-() const { return from_twice(-twice_); }
  HalfInt operator+(const HalfInt& o) const { return from_twice(twice_ + o.twice_); }
  HalfInt operator-(const HalfInt& o) const { return from_twice(twice_ - o.twice_); }
  HalfInt times(long n) const { return from_twice(twice_ * n); }

  bool operator==(const HalfInt& o) const { return twice_ == o.twice_; }
  std::strong_ordering operator<=>(const HalfInt& o) const {
    int c = cmp(twice_, o.twice_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class twice_{0};
};

enum class Sign { plus, minus };

inline int sign_pow(Sign s, long n) { return (s == Sign::minus && (n % 2 != 0)) ? -1 : 1; }
inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
Sign parse_sign(const std::string& text);
inline const char* to_string(Sign s) { return s == Sign::plus ? "plus" : "minus"; }

// Product of two half-integers; lands in (1/4)Z.
inline QExp operator*(const HalfInt& a, const HalfInt& b) { return a.value() * b.value(); }

}  // namespace mocktheta
