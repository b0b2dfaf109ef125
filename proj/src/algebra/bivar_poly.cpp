#include "dasep/algebra/bivar_poly.hpp"

#include <algorithm>

#include "dasep/error.hpp"

namespace dasep {

BivarPoly::BivarPoly(long constant) : BivarPoly(Rational(constant)) {}

BivarPoly::BivarPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

BivarPoly::BivarPoly(std::initializer_list<std::pair<const Monomial, Rational>> terms) {
  for (const auto& [m, c] : terms) add_term(m, c);
}

BivarPoly BivarPoly::monomial(Monomial m, const Rational& coeff) {
  BivarPoly p;
  p.add_term(m, coeff);
  return p;
}

bool BivarPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Rational BivarPoly::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Monomial, Rational>& BivarPoly::leading_term() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidParams, "leading term of zero polynomial");
  return *terms_.rbegin();
}

std::uint32_t BivarPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

std::uint32_t BivarPoly::degree_u() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.eu;
}

std::uint32_t BivarPoly::degree_t() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.et);
  return d;
}

void BivarPoly::add_term(Monomial m, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term({ma.eu + mb.eu, ma.et + mb.et}, ca * cb);
  return r;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& o) { return *this = *this * o; }

BivarPoly& BivarPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Rational BivarPoly::eval(const Rational& u0, const Rational& t0) const {
  Rational sum(0);
  for (const auto& [m, c] : terms_) sum += c * pow(u0, m.eu) * pow(t0, m.et);
  return sum;
}

std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    std::string vars;
    auto append = [&vars](char name, std::uint32_t e) {
      if (e == 0) return;
      if (!vars.empty()) vars += "*";
      vars += name;
      if (e > 1) vars += "^" + std::to_string(e);
    };
    append('u', m.eu);
    append('t', m.et);
    if (vars.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += vars;
    } else {
      out += mag.to_string() + "*" + vars;
    }
  }
  return out;
}

BivarPoly poly_arith(const BivarPoly& a, const BivarPoly& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::add: return a + b;
    case ArithKind::sub: return a - b;
    case ArithKind::mul: return a * b;
  }
  return {};
}

Rational poly_eval(const BivarPoly& p, const Rational& u0, const Rational& t0) {
  return p.eval(u0, t0);
}

BivarPoly pow(const BivarPoly& base, unsigned exponent) {
  BivarPoly result(1);
  BivarPoly b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

BivarPoly poly_exact_div(const BivarPoly& a, const BivarPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::NotDivisible, "division by the zero polynomial");
  const auto& [lead_m, lead_c] = b.leading_term();
  BivarPoly quotient;
  BivarPoly rest = a;
  while (!rest.is_zero()) {
    const auto [rm, rc] = rest.leading_term();
    if (!lead_m.divides(rm))
      throw Error(ErrorCode::NotDivisible, "(" + a.to_string() + ") / (" + b.to_string() + ")");
    BivarPoly step = BivarPoly::monomial({rm.eu - lead_m.eu, rm.et - lead_m.et}, rc / lead_c);
    quotient += step;
    rest -= step * b;
  }
  return quotient;
}

Integer denominator_lcm(std::span<const BivarPoly> polys) {
  Integer l = 1;
  for (const auto& p : polys)
    for (const auto& [m, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  return l;
}

Integer integer_content(std::span<const BivarPoly> polys) {
  Integer g = 0;
  for (const auto& p : polys)
    for (const auto& [m, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.numerator().get_mpz_t());
  return g;
}

}  // namespace dasep
