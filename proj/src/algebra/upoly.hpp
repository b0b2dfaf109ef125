#pragma once

#include <utility>
#include <vector>

#include "dasep/algebra/rational.hpp"

namespace dasep::detail {

// Dense univariate polynomial over Q; coeffs[i] multiplies x^i and the
// leading coefficient is never zero.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  explicit UPoly(const Rational& constant);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& lc() const { return coeffs_.back(); }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  UPoly monic() const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const Rational& c);
  friend bool operator==(const UPoly&, const UPoly&) = default;

  /// x^k * this
  UPoly shifted(std::size_t k) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly exact_div(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly pow(const UPoly& base, unsigned exponent);

}  // namespace dasep::detail
