#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dasep/algebra/rational.hpp"

namespace dasep {

/// Exponent pair u^eu t^et. Ordered lexicographically with u > t.
struct Monomial {
  std::uint32_t eu = 0;
  std::uint32_t et = 0;

  std::uint32_t total_degree() const { return eu + et; }
  bool divides(const Monomial& other) const { return eu <= other.eu && et <= other.et; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse polynomial in the indeterminates u and t over the rationals.
///
/// Terms are kept in canonical form: no zero coefficient is ever stored, so two
/// polynomials are equal exactly when their term maps are equal.
class BivarPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  BivarPoly() = default;
  BivarPoly(long constant);  // NOLINT(google-explicit-constructor)
  BivarPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  BivarPoly(std::initializer_list<std::pair<const Monomial, Rational>> terms);

  static BivarPoly u() { return monomial({1, 0}); }
  static BivarPoly t() { return monomial({0, 1}); }
  static BivarPoly monomial(Monomial m, const Rational& coeff = Rational(1));

  /// Parses the rendering produced by to_string(); also accepts parentheses,
  /// e.g. "u*(u + 4*t + 3)".
  static BivarPoly parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  Rational coefficient(Monomial m) const;
  /// Lexicographically greatest term; requires a nonzero polynomial.
  const std::pair<const Monomial, Rational>& leading_term() const;

  std::uint32_t total_degree() const;
  std::uint32_t degree_u() const;
  std::uint32_t degree_t() const;

  void add_term(Monomial m, const Rational& coeff);

  BivarPoly operator-() const;
  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  BivarPoly& operator*=(const BivarPoly& o);
  BivarPoly& operator*=(const Rational& c);

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(BivarPoly a, const Rational& c) { return a *= c; }
  friend BivarPoly operator*(const Rational& c, BivarPoly a) { return a *= c; }

  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

  Rational eval(const Rational& u0, const Rational& t0) const;

  /// Terms from greatest to least, `^` for powers and explicit `*`,
  /// e.g. "u^2 + 3*u*t + 4*u".
  std::string to_string() const;

 private:
  Terms terms_;
};

enum class ArithKind { add, sub, mul };

BivarPoly poly_arith(const BivarPoly& a, const BivarPoly& b, ArithKind kind);
Rational poly_eval(const BivarPoly& p, const Rational& u0, const Rational& t0);
BivarPoly pow(const BivarPoly& base, unsigned exponent);

/// Quotient of an exact division. Throws Error(NotDivisible) when b does not
/// divide a in Q[u,t].
BivarPoly poly_exact_div(const BivarPoly& a, const BivarPoly& b);

/// gcd in Q[u,t], scaled to integer coefficients with content 1 and a positive
/// lexicographically greatest coefficient. gcd(0, 0) = 0.
BivarPoly poly_gcd(const BivarPoly& a, const BivarPoly& b);

/// gcd of a nonempty list that is not identically zero.
BivarPoly poly_content_gcd(std::span<const BivarPoly> polys);

/// Least common multiple of the coefficient denominators over a list.
Integer denominator_lcm(std::span<const BivarPoly> polys);
/// gcd of all integer coefficients over a list of integer polynomials.
Integer integer_content(std::span<const BivarPoly> polys);

/// Default bound on the total degree of polynomials returned by the solvers.
inline constexpr std::uint32_t kDefaultDegreeCap = 64;

}  // namespace dasep
