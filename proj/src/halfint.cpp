#include "mocktheta/halfint.hpp"

#include "mocktheta/errors.hpp"

#include <regex>

namespace mocktheta {

QExp parse_rational(const std::string& text) {
  static const std::regex pattern(R"(^\s*([+-]?\d+)(?:/(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw ParamDomain("not an exact rational: '" + text + "'");
  mpz_class num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
  mpz_class den(1);
  if (m[2].matched) den = mpz_class(m[2].str());
  if (den == 0) throw ParamDomain("zero denominator: '" + text + "'");
  QExp q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const QExp& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const QExp& q) { return q.get_d(); }

HalfInt HalfInt::from_rational(const QExp& q) {
  QExp t = q * 2;
  if (t.get_den() != 1) throw ParamDomain("not a half-integer: " + to_string(q));
  return from_twice(t.get_num());
}

HalfInt HalfInt::parse(const std::string& text) { return from_rational(parse_rational(text)); }

Sign parse_sign(const std::string& text) {
  if (text == "plus" || text == "+") return Sign::plus;
  if (text == "minus" || text == "-") return Sign::minus;
  throw ParamDomain("sign must be plus or minus: '" + text + "'");
}

std::string HalfInt::str() const {
  if (is_integer()) return mpz_class(twice_ / 2).get_str();
  return twice_.get_str() + "/2";
}

}  // namespace mocktheta
