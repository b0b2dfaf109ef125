#include "algebra/upoly.hpp"

#include "dasep/error.hpp"

namespace dasep::detail {

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = Rational(1) / lc();
  return *this * inv;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const Rational& s) {
  if (s.is_zero()) return {};
  UPoly r = a;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

UPoly UPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Rational> c(k, Rational(0));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::NotDivisible, "univariate division by zero");
  std::vector<Rational> q(std::max(0, a.degree() - b.degree() + 1));
  UPoly r = a;
  Rational inv = Rational(1) / b.lc();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    std::size_t k = static_cast<std::size_t>(r.degree() - b.degree());
    Rational f = r.lc() * inv;
    q[k] = f;
    r = r - (b * f).shifted(k);
  }
  return {UPoly(std::move(q)), r};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::NotDivisible, "univariate exact division");
  return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly pow(const UPoly& base, unsigned exponent) {
  UPoly r(Rational(1));
  for (unsigned i = 0; i < exponent; ++i) r = r * base;
  return r;
}

}  // namespace dasep::detail
