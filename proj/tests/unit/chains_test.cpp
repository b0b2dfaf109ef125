#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "dasep/chains.hpp"
#include "dasep/error.hpp"
#include "json.hpp"
#include "oracle.hpp"

using namespace dasep;

namespace {

void expect_matches_oracle(int n, int p, int q, const Rational& u0, const Rational& t0) {
  const TransitionSystem sys = build_dasep(n, p, q);
  const oracle::DenseChain ref = oracle::dasep_at(n, p, q, u0.get(), t0.get());
  ASSERT_EQ(sys.states(), ref.states);
  const Rational scale(sys.scale());
  for (std::size_t x = 0; x < sys.size(); ++x) {
    for (std::size_t y = 0; y < sys.size(); ++y) {
      const BivarPoly scaled = x == y ? sys.diagonal(x) : sys.rate(x, y);
      EXPECT_EQ((scaled.eval(u0, t0) / scale).get(), ref.P[x][y]) << sys.state(x) << " -> " << sys.state(y);
    }
  }
}

}  // namespace

TEST(Dasep, RatesMatchDirectConstruction) {
  for (int n = 3; n <= 5; ++n)
    for (int p = 1; p <= 3; ++p)
      for (int q = 1; q < n; ++q) expect_matches_oracle(n, p, q, Rational::parse("2/7"), Rational::parse("5/3"));
}

TEST(Dasep, SpotRates) {
  const TransitionSystem sys = build_dasep(3, 2, 2);
  const auto idx = [&](const char* s) { return *sys.index_of(s); };
  const BivarPoly u = BivarPoly::u(), t = BivarPoly::t();
  EXPECT_EQ(sys.scale(), 9);
  EXPECT_EQ(sys.rate(idx("021"), idx("012")), t);            // 21 -> 12
  EXPECT_EQ(sys.rate(idx("012"), idx("021")), BivarPoly(1));
  EXPECT_EQ(sys.rate(idx("102"), idx("201")), t);            // wrap-around, last > first
  EXPECT_EQ(sys.rate(idx("201"), idx("102")), BivarPoly(1));
  EXPECT_EQ(sys.rate(idx("011"), idx("021")), u);
  EXPECT_EQ(sys.rate(idx("021"), idx("011")), BivarPoly(1));
  EXPECT_TRUE(sys.rate(idx("011"), idx("022")).is_zero());
  EXPECT_FALSE(sys.has_merged_moves());
}

TEST(Dasep, TwoSitesMergeCoincidentSwaps) {
  const TransitionSystem sys = build_dasep(2, 2, 1);
  EXPECT_TRUE(sys.has_merged_moves());
  EXPECT_EQ(sys.rate(*sys.index_of("01"), *sys.index_of("10")), BivarPoly::t() + 1);
}

TEST(Dasep, RejectsInvalidParameters) {
  for (auto [n, p, q] : {std::tuple{3, 2, 3}, {3, 0, 1}, {1, 1, 1}, {4, 10, 2}, {4, 2, 0}}) {
    try {
      build_dasep(n, p, q);
      FAIL() << n << p << q;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidParams);
    }
  }
}

TEST(Chains, StochasticOnTheUnitSquare) {
  for (ChainKind kind : {ChainKind::dasep, ChainKind::cbp, ChainKind::rrg}) {
    const TransitionSystem sys = build_chain(kind, 5, 3, 3);
    const StochasticReport r = check_stochastic(sys, Rational(1), Rational(1));
    EXPECT_EQ(r.rows_checked, sys.size());
    EXPECT_GE(r.min_diagonal, Rational(0));
    EXPECT_NO_THROW(check_stochastic(sys, Rational(0), Rational(0)));
    EXPECT_TRUE(check_irreducible(sys));
  }
}

TEST(Chains, StochasticityChecks) {
  try {
    check_stochastic(build_dasep(3, 2, 2), Rational(2), Rational(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidParams);
  }
  TransitionSystem heavy(ChainKind::dasep, {2, 1, 1}, 6, {"a", "b"});
  heavy.add_rate(0, 1, Rational(7) * BivarPoly::u());
  heavy.add_rate(1, 0, BivarPoly(1));
  EXPECT_NO_THROW(check_stochastic(heavy, Rational(1, 2), Rational(0)));
  try {
    check_stochastic(heavy, Rational(1), Rational(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotStochastic);
  }
  EXPECT_FALSE(check_irreducible(TransitionSystem(ChainKind::dasep, {2, 1, 1}, 6, {"a", "b"})));
}

TEST(Cbp, WordMovesAndMultiplicityWeightedMutations) {
  const TransitionSystem sys = build_cbp(4, 2, 2);
  const auto idx = [&](const char* s) { return *sys.index_of(s); };
  const BivarPoly u = BivarPoly::u(), t = BivarPoly::t();
  EXPECT_EQ(sys.rate(idx("0011:(1,1)"), idx("0011:(2,1)")), Rational(2) * u);
  EXPECT_EQ(sys.rate(idx("0011:(2,2)"), idx("0011:(2,1)")), BivarPoly(2));
  EXPECT_EQ(sys.rate(idx("0011:(2,1)"), idx("0101:(2,1)")), BivarPoly(1));  // 01 -> 10
  EXPECT_EQ(sys.rate(idx("0101:(2,1)"), idx("0011:(2,1)")), t);             // 10 -> 01
  EXPECT_EQ(sys.rate(idx("0011:(1,1)"), idx("1010:(1,1)")), t);             // 10 -> 01 across the wrap
  EXPECT_EQ(sys.rate(idx("1010:(1,1)"), idx("0011:(1,1)")), BivarPoly(1));  // 01 -> 10 across the wrap
  EXPECT_EQ(sys.rate(idx("0101:(2,1)"), idx("1001:(2,1)")), BivarPoly(1));  // interior 01 -> 10
  EXPECT_EQ(sys.rate(idx("0101:(2,1)"), idx("1100:(2,1)")), t);             // 10 -> 01 across the wrap
}

TEST(Chains, StochasticAtRandomPoints) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> den(1, 12);
  for (ChainKind kind : {ChainKind::dasep, ChainKind::cbp, ChainKind::rrg}) {
    const TransitionSystem sys = build_chain(kind, 4, 3, 2);
    for (int k = 0; k < 20; ++k) {
      const long du = den(rng), dt = den(rng);
      const Rational u0(Integer(std::uniform_int_distribution<long>(0, du)(rng)), Integer(du));
      const Rational t0(Integer(std::uniform_int_distribution<long>(0, dt)(rng)), Integer(dt));
      EXPECT_NO_THROW(check_stochastic(sys, u0, t0));
    }
  }
}

TEST(Dasep, MovesConserveParticlesAndChangeWeightByOne) {
  for (int n = 3; n <= 6; ++n) {
    for (int q = 1; q <= std::min(3, n - 1); ++q) {
      const TransitionSystem sys = build_dasep(n, 3, q);
      for (std::size_t x = 0; x < sys.size(); ++x) {
        const std::string& a = sys.state(x);
        for (const auto& [y, rate] : sys.row(x)) {
          const std::string& b = sys.state(y);
          int weight_a = 0, weight_b = 0, nonzero_b = 0;
          for (char c : a) weight_a += c - '0';
          for (char c : b) weight_b += c - '0', nonzero_b += c != '0';
          EXPECT_EQ(nonzero_b, q);
          const bool swap = std::is_permutation(a.begin(), a.end(), b.begin());
          EXPECT_TRUE(swap || std::abs(weight_a - weight_b) == 1) << a << " -> " << b;
          EXPECT_TRUE(rate == BivarPoly(1) || rate == BivarPoly::t() || rate == BivarPoly::u()) << rate.to_string();
        }
      }
    }
  }
}

TEST(Cbp, FixedWordEdgesReproduceGrowthModel) {
  const TransitionSystem cbp = build_cbp(5, 3, 3);
  const TransitionSystem rrg = build_rrg(5, 3, 3);
  const std::string word = "00111";
  for (std::size_t x = 0; x < rrg.size(); ++x) {
    const std::size_t cx = *cbp.index_of(word + ":" + rrg.state(x));
    for (std::size_t y = 0; y < rrg.size(); ++y) {
      if (x == y) continue;
      EXPECT_EQ(cbp.rate(cx, *cbp.index_of(word + ":" + rrg.state(y))), rrg.rate(x, y));
    }
  }
}

TEST(Rrg, Rates) {
  const TransitionSystem sys = build_rrg(5, 3, 3);
  const auto idx = [&](const char* s) { return *sys.index_of(s); };
  EXPECT_EQ(sys.scale(), 15);
  EXPECT_EQ(sys.rate(idx("(2,1,1)"), idx("(2,2,1)")), Rational(2) * BivarPoly::u());
  EXPECT_EQ(sys.rate(idx("(2,2,1)"), idx("(2,1,1)")), BivarPoly(2));
  EXPECT_EQ(sys.rate(idx("(3,2,1)"), idx("(3,1,1)")), BivarPoly(1));
}

TEST(Export, MatrixJsonAndDot) {
  const TransitionSystem sys = build_dasep(3, 2, 2);
  const auto doc = nlohmann::json::parse(export_matrix_json(sys));
  EXPECT_EQ(doc["kind"], "dasep");
  EXPECT_EQ(doc["scale"], 9);
  EXPECT_EQ(doc["edges"].size(), sys.edge_count());
  const std::string dot = export_dot(sys);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_NE(dot.find("\"011\""), std::string::npos);
  EXPECT_EQ(parse_chain_kind("rrg"), ChainKind::rrg);
  EXPECT_THROW(parse_chain_kind("tasep"), Error);
}
