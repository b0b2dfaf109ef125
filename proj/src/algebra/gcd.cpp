#include <algorithm>

#include "algebra/upoly.hpp"
#include "dasep/algebra/bivar_poly.hpp"
#include "dasep/error.hpp"

namespace dasep {
namespace {

using detail::UPoly;

// Q[u,t] viewed as (Q[u])[t]: element i is the coefficient of t^i.
using RPoly = std::vector<UPoly>;

void trim(RPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const RPoly& p) { return static_cast<int>(p.size()) - 1; }

RPoly to_rpoly(const BivarPoly& p) {
  std::vector<std::vector<Rational>> dense(p.degree_t() + 1, std::vector<Rational>(p.degree_u() + 1));
  for (const auto& [m, c] : p.terms()) dense[m.et][m.eu] = c;
  RPoly r;
  for (auto& coeffs : dense) r.emplace_back(std::move(coeffs));
  trim(r);
  return r;
}

BivarPoly from_rpoly(const RPoly& p) {
  BivarPoly r;
  for (std::size_t et = 0; et < p.size(); ++et)
    for (std::size_t eu = 0; eu < p[et].coeffs().size(); ++eu)
      r.add_term({static_cast<std::uint32_t>(eu), static_cast<std::uint32_t>(et)}, p[et].coeffs()[eu]);
  return r;
}

UPoly content(const RPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    g = detail::gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

RPoly scale(const RPoly& p, const UPoly& c) {
  RPoly r;
  for (const auto& x : p) r.push_back(x * c);
  trim(r);
  return r;
}

RPoly divide(const RPoly& p, const UPoly& c) {
  RPoly r;
  for (const auto& x : p) r.push_back(detail::exact_div(x, c));
  return r;
}

RPoly subtract(const RPoly& a, const RPoly& b) {
  RPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    UPoly x = i < a.size() ? a[i] : UPoly();
    UPoly y = i < b.size() ? b[i] : UPoly();
    r[i] = x - y;
  }
  trim(r);
  return r;
}

RPoly shift(const RPoly& p, std::size_t k) {
  RPoly r(k);
  r.insert(r.end(), p.begin(), p.end());
  return r;
}

// lc(b)^(deg a - deg b + 1) * a  mod  b
RPoly pseudo_remainder(const RPoly& a, const RPoly& b) {
  const int delta = degree(a) - degree(b);
  const UPoly& lead = b.back();
  RPoly r = a;
  int steps = 0;
  while (!r.empty() && degree(r) >= degree(b)) {
    std::size_t k = static_cast<std::size_t>(degree(r) - degree(b));
    UPoly top = r.back();
    r = subtract(scale(r, lead), shift(scale(b, top), k));
    ++steps;
  }
  for (int i = steps; i < delta + 1; ++i) r = scale(r, lead);
  return r;
}

RPoly primitive_part(const RPoly& p) {
  if (p.empty()) return p;
  return divide(p, content(p));
}

// Subresultant PRS in (Q[u])[t]; every division below is exact in Q[u].
RPoly rpoly_gcd(RPoly a, RPoly b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (degree(a) < degree(b)) std::swap(a, b);
  UPoly ca = content(a);
  UPoly cb = content(b);
  UPoly d = detail::gcd(ca, cb);
  a = divide(a, ca);
  b = divide(b, cb);
  UPoly g(Rational(1));
  UPoly h(Rational(1));
  for (;;) {
    const int delta = degree(a) - degree(b);
    RPoly r = pseudo_remainder(a, b);
    if (r.empty()) break;
    if (degree(r) == 0) {
      b = RPoly{UPoly(Rational(1))};
      break;
    }
    a = std::move(b);
    b = divide(r, g * detail::pow(h, static_cast<unsigned>(delta)));
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = detail::exact_div(detail::pow(g, static_cast<unsigned>(delta)),
                            detail::pow(h, static_cast<unsigned>(delta - 1)));
    }
  }
  return scale(primitive_part(b), d);
}

BivarPoly normalize_gcd(BivarPoly g) {
  if (g.is_zero()) return g;
  std::vector<BivarPoly> one{g};
  Rational s(denominator_lcm(one));
  g *= s;
  std::vector<BivarPoly> scaled{g};
  g *= Rational(Integer(1), integer_content(scaled));
  if (g.leading_term().second.sign() < 0) g = -g;
  return g;
}

}  // namespace

BivarPoly poly_gcd(const BivarPoly& a, const BivarPoly& b) {
  if (a.is_zero()) return normalize_gcd(b);
  if (b.is_zero()) return normalize_gcd(a);
  if (a.is_constant() || b.is_constant()) return BivarPoly(1);
  return normalize_gcd(from_rpoly(rpoly_gcd(to_rpoly(a), to_rpoly(b))));
}

namespace {

/// Specializes the other variable to `at`, giving a univariate polynomial in
/// u (in_u) or in t.
detail::UPoly specialize(const BivarPoly& p, bool in_u, const Rational& at) {
  const std::uint32_t deg = in_u ? p.degree_u() : p.degree_t();
  std::vector<Rational> coeffs(deg + 1);
  for (const auto& [m, c] : p.terms())
    coeffs[in_u ? m.eu : m.et] += c * pow(at, in_u ? m.et : m.eu);
  return detail::UPoly(std::move(coeffs));
}

/// True when the inputs provably share no factor involving the variable.
/// If g divides every input and the specialization keeps the degree of the
/// first input, deg g equals the degree of g specialized, which divides the
/// gcd of the specializations.
bool coprime_in(const std::vector<const BivarPoly*>& order, bool in_u) {
  const BivarPoly& first = *order.front();
  const std::uint32_t deg = in_u ? first.degree_u() : first.degree_t();
  if (deg == 0) return true;
  for (long at = 1, tries = 0; tries < 3 && at < 64; ++at) {
    if (specialize(first, in_u, Rational(at)).degree() != static_cast<int>(deg)) continue;
    ++tries;
    detail::UPoly g = specialize(first, in_u, Rational(at));
    for (std::size_t i = 1; i < order.size() && g.degree() > 0; ++i)
      g = detail::gcd(g, specialize(*order[i], in_u, Rational(at)));
    if (g.degree() == 0) return true;
  }
  return false;
}

}  // namespace

BivarPoly poly_content_gcd(std::span<const BivarPoly> polys) {
  if (polys.empty()) throw Error(ErrorCode::InvalidParams, "gcd of an empty list");
  // Smallest inputs first so the running gcd collapses early.
  std::vector<const BivarPoly*> order;
  for (const auto& p : polys)
    if (!p.is_zero()) order.push_back(&p);
  if (order.empty()) throw Error(ErrorCode::InvalidParams, "gcd of an all-zero list");
  std::stable_sort(order.begin(), order.end(), [](const BivarPoly* x, const BivarPoly* y) {
    return x->total_degree() < y->total_degree();
  });
  if (coprime_in(order, true) && coprime_in(order, false)) return BivarPoly(1);
  BivarPoly g = normalize_gcd(*order.front());
  for (std::size_t i = 1; i < order.size() && !g.is_constant(); ++i) {
    // Exact-division test skips the PRS when g already divides.
    try {
      (void)poly_exact_div(*order[i], g);
      continue;
    } catch (const Error&) {
    }
    g = poly_gcd(g, *order[i]);
  }
  return g;
}

}  // namespace dasep
