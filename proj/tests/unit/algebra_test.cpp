#include <gtest/gtest.h>

#include <random>

#include "dasep/algebra/bivar_poly.hpp"
#include "dasep/error.hpp"

using namespace dasep;

namespace {

const BivarPoly U = BivarPoly::u();
const BivarPoly T = BivarPoly::t();

BivarPoly random_poly(std::mt19937_64& rng, int max_deg, int terms) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-9, 9);
  BivarPoly p;
  for (int i = 0; i < terms; ++i) {
    p.add_term({static_cast<std::uint32_t>(deg(rng)), static_cast<std::uint32_t>(deg(rng))}, Rational(coef(rng)));
  }
  return p;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 20);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

}  // namespace

TEST(Rational, ParseAndCanonicalForm) {
  EXPECT_EQ(Rational::parse("6/4"), Rational(Integer(3), Integer(2)));
  EXPECT_EQ(Rational::parse("-3").to_string(), "-3");
  EXPECT_EQ(Rational::parse("2/-4").to_string(), "-1/2");
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("x"), Error);
  EXPECT_THROW(Rational(1) / Rational(0), Error);
}

TEST(BivarPoly, ZeroCoefficientsAreNeverStored) {
  BivarPoly p = U + T;
  p -= T;
  EXPECT_EQ(p, U);
  EXPECT_EQ(p.term_count(), 1u);
  EXPECT_TRUE((U - U).is_zero());
}

TEST(BivarPoly, RenderingAndParsingRoundTrip) {
  const BivarPoly p = U * (U + Rational(4) * T + 3);
  EXPECT_EQ(p.to_string(), "u^2 + 4*u*t + 3*u");
  EXPECT_EQ(BivarPoly::parse("u*(u + 4*t + 3)"), p);
  EXPECT_EQ(BivarPoly::parse(p.to_string()), p);
  EXPECT_EQ(BivarPoly::parse("-1/2*t^3 + 2").coefficient({0, 3}), Rational(Integer(-1), Integer(2)));
  EXPECT_THROW(BivarPoly::parse("u +"), Error);
  EXPECT_THROW(BivarPoly::parse("x^2"), Error);
}

TEST(BivarPoly, Degrees) {
  const BivarPoly p = pow(U, 3) * T + pow(T, 5);
  EXPECT_EQ(p.total_degree(), 5u);
  EXPECT_EQ(p.degree_u(), 3u);
  EXPECT_EQ(p.degree_t(), 5u);
  EXPECT_EQ(p.leading_term().first, (Monomial{3, 1}));
}

TEST(BivarPoly, RingAxiomsOnRandomInputs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const BivarPoly a = random_poly(rng, 4, 5), b = random_poly(rng, 4, 5), c = random_poly(rng, 3, 4);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(poly_arith(a, b, ArithKind::sub), a - b);
  }
}

TEST(BivarPoly, EvaluationIsARingHomomorphism) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const BivarPoly a = random_poly(rng, 4, 5), b = random_poly(rng, 4, 5);
    const Rational u0 = random_rational(rng), t0 = random_rational(rng);
    EXPECT_EQ((a * b).eval(u0, t0), a.eval(u0, t0) * b.eval(u0, t0));
    EXPECT_EQ((a + b).eval(u0, t0), a.eval(u0, t0) + b.eval(u0, t0));
    EXPECT_EQ(poly_eval(a, u0, t0), a.eval(u0, t0));
  }
}

TEST(BivarPoly, ExactDivision) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const BivarPoly a = random_poly(rng, 3, 4), b = random_poly(rng, 3, 4);
    if (b.is_zero()) continue;
    EXPECT_EQ(poly_exact_div(a * b, b), a);
  }
  try {
    poly_exact_div(U * U + 1, U + 1);
    FAIL() << "expected NotDivisible";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDivisible);
  }
}

TEST(PolyGcd, RecoversPlantedCommonFactor) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const BivarPoly g = random_poly(rng, 2, 3), a = random_poly(rng, 3, 3), b = random_poly(rng, 3, 3);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    const BivarPoly d = poly_gcd(g * a, g * b);
    // d is normalized, so compare up to a rational unit through exact division.
    EXPECT_NO_THROW(poly_exact_div(d, g));
    EXPECT_NO_THROW(poly_exact_div(g * a, d));
    EXPECT_NO_THROW(poly_exact_div(g * b, d));
    const BivarPoly ra = poly_exact_div(g * a, d), rb = poly_exact_div(g * b, d);
    EXPECT_TRUE(poly_gcd(ra, rb).is_constant());
  }
}

TEST(PolyGcd, Normalization) {
  EXPECT_EQ(poly_gcd(BivarPoly(), BivarPoly()), BivarPoly());
  EXPECT_EQ(poly_gcd(Rational(6) * U * (T + 1), Rational(-4) * U * U), Rational(1) * U);
  const std::vector<BivarPoly> list{Rational(2) * U * (T + 1), Rational(4) * U * U * (T + 1), U * (T + 1) * (T + 1)};
  EXPECT_EQ(poly_content_gcd(list), U * T + U);
}

TEST(PolyGcd, IntegerHelpers) {
  const std::vector<BivarPoly> list{BivarPoly(Rational(Integer(1), Integer(6))) * U,
                                    BivarPoly(Rational(Integer(3), Integer(4)))};
  EXPECT_EQ(denominator_lcm(list), 12);
  const std::vector<BivarPoly> ints{Rational(6) * U, BivarPoly(9), Rational(15) * T};
  EXPECT_EQ(integer_content(ints), 3);
}
