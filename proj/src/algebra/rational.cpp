#include "dasep/algebra/rational.hpp"

#include "dasep/error.hpp"

namespace dasep {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidParams, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s, 10));
    return Rational(Integer(s.substr(0, slash), 10), Integer(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + s + "'");
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidParams, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

}  // namespace dasep
