#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "dasep/error.hpp"
#include "dasep/theorems.hpp"

using namespace dasep;

namespace {

const BivarPoly U = BivarPoly::u();
const BivarPoly T = BivarPoly::t();

}  // namespace

TEST(Sequences, InitialTermsAndRecurrence) {
  const SequencePair s = seq_ab(8);
  EXPECT_EQ(s.a_at(0), BivarPoly(1));
  EXPECT_EQ(s.a_at(1), U + Rational(3) * T + 4);
  EXPECT_EQ(s.b_at(-1), BivarPoly(0));
  EXPECT_EQ(s.b_at(0), BivarPoly(1));
  EXPECT_EQ(s.b_at(1), U + Rational(2) * T + 3);
  const BivarPoly step = U + Rational(2) * T + 3, back = pow(T + 1, 2);
  for (int k = 2; k <= 8; ++k) {
    EXPECT_EQ(s.a_at(k), step * s.a_at(k - 1) - back * s.a_at(k - 2));
    EXPECT_EQ(s.b_at(k), step * s.b_at(k - 1) - back * s.b_at(k - 2));
  }
  EXPECT_THROW(seq_ab(0), Error);
}

TEST(Matchings, SmallGraphsByHand) {
  // C_3: the empty matching and three single edges.
  EXPECT_EQ(matchings_weight_sum(MatchingGraph::cycle, 1), U + 1 + Rational(3) * (T + 1));
  // L_3: the empty matching and two single edges.
  EXPECT_EQ(matchings_weight_sum(MatchingGraph::path, 1), U + 1 + Rational(2) * (T + 1));
}

TEST(Matchings, EqualTheRecurrenceSequences) {
  const SequencePair s = seq_ab(6);
  for (int k = 1; k <= 6; ++k) {
    EXPECT_EQ(matchings_weight_sum(MatchingGraph::cycle, k), s.a_at(k)) << k;
    EXPECT_EQ(matchings_weight_sum(MatchingGraph::path, k), s.b_at(k)) << k;
  }
}

TEST(ClosedForm, SmallRings) {
  for (int n = 3; n <= 7; ++n) {
    const Report r = verify_n22(n);
    EXPECT_TRUE(r.pass) << r.to_json();
  }
  const StationaryVector three = closed_form_n22(3);
  EXPECT_EQ(three["012"] + three["021"], Rational(2) * U * three["011"]);
  EXPECT_EQ(three["022"], U * U * three["011"]);
  EXPECT_THROW(closed_form_n22(2), Error);
}

TEST(Theorems, GridSample) {
  for (auto [n, p, q] : {std::tuple{3, 2, 2}, {4, 3, 2}, {5, 2, 3}, {4, 3, 3}}) {
    EXPECT_TRUE(verify_main_theorem(n, p, q).pass);
    EXPECT_TRUE(verify_ratio_corollary(n, p, q).pass);
    EXPECT_TRUE(verify_cbp_closed_form(n, p, q).pass);
  }
}

TEST(Theorems, MainTheoremRejectsAPerturbedVector) {
  const TransitionSystem sys = build_dasep(4, 2, 2);
  StationaryVector pi = solve_stationary_symbolic(sys);
  pi.polys[*pi.index_of("0012")] += T;
  const Report r = verify_main_theorem(sys, pi);
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.witnesses.empty());
}

TEST(Theorems, TrivialFamilies) {
  for (int n = 2; n <= 6; ++n) {
    for (int q = 1; q < n; ++q) {
      const TransitionSystem sys = build_dasep(n, 1, q);
      EXPECT_TRUE(verify_uniform(sys, solve_stationary_symbolic(sys)).pass);
    }
    for (int p = 1; p <= 3; ++p) {
      const TransitionSystem sys = build_dasep(n, p, 1);
      EXPECT_TRUE(verify_single_particle(sys, solve_stationary_symbolic(sys)).pass);
    }
  }
  const TransitionSystem sys = build_dasep(3, 2, 2);
  EXPECT_FALSE(verify_uniform(sys, solve_stationary_symbolic(sys)).pass);
}

TEST(Theorems, PushForwardOntoGrowthModel) {
  const TransitionSystem cbp = build_cbp(5, 3, 2);
  const TransitionSystem rrg = build_rrg(5, 3, 2);
  EXPECT_TRUE(
      verify_pushforward(shape_map(cbp, rrg), solve_stationary_symbolic(cbp), solve_stationary_symbolic(rrg)).pass);
  EXPECT_TRUE(verify_rrg_ratios(rrg, solve_stationary_symbolic(rrg)).pass);
}

TEST(Oeis, FixturesMatch) {
  const Report r = oeis_specialization(10);
  EXPECT_TRUE(r.pass) << r.to_json();
}

TEST(Oeis, MissingOrShortFixtures) {
  const auto dir = std::filesystem::temp_directory_path() / "dasep_fixture_test";
  std::filesystem::create_directories(dir);
  try {
    oeis_specialization(10, (dir / "absent").string());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FixtureMissing);
  }
  std::ofstream(dir / "A082762.txt") << "1\n8\n";
  std::ofstream(dir / "A084326.txt") << "0\n1\n";
  try {
    oeis_specialization(10, dir.string());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FixtureMissing);
  }
  std::filesystem::remove_all(dir);
}

TEST(Homomesy, BothActions) {
  for (auto [n, p, q] : {std::tuple{3, 2, 2}, {5, 3, 2}, {4, 2, 3}}) {
    const TransitionSystem sys = build_dasep(n, p, q);
    const StationaryVector pi = solve_stationary_symbolic(sys);
    for (GroupAction action : {GroupAction::permute_particles, GroupAction::permute_sites}) {
      const auto orbits = homomesy_check(sys, pi, action);
      EXPECT_FALSE(orbits.empty());
      for (const auto& o : orbits) EXPECT_TRUE(o.pass) << o.orbit;
      EXPECT_TRUE(summarize_homomesy(orbits, action, sys.params()).pass);
    }
  }
}

TEST(Homomesy, OrbitSizesForSitePermutations) {
  const auto orbits = homomesy_check(3, 2, 2, GroupAction::permute_sites);
  ASSERT_EQ(orbits.size(), 3u);
  EXPECT_EQ(orbits[1].orbit, "(2,1)");
  EXPECT_EQ(orbits[1].size, 6);
  EXPECT_EQ(orbits[1].factor, (Monomial{1, 0}));
}
