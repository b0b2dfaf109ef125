#include <fstream>
#include <string>

#include "dasep/error.hpp"
#include "dasep/theorems.hpp"

namespace dasep {

const BivarPoly& SequencePair::a_at(int k) const {
  if (k < 0 || k > k_max()) throw Error(ErrorCode::InvalidParams, "a_k index out of range");
  return a[static_cast<std::size_t>(k)];
}

const BivarPoly& SequencePair::b_at(int k) const {
  if (k < -1 || k > k_max()) throw Error(ErrorCode::InvalidParams, "b_k index out of range");
  return b[static_cast<std::size_t>(k + 1)];
}

SequencePair seq_ab(int k_max) {
  if (k_max < 1) throw Error(ErrorCode::InvalidParams, "k_max must be at least 1");
  const BivarPoly u = BivarPoly::u();
  const BivarPoly t = BivarPoly::t();
  const BivarPoly step = u + Rational(2) * t + 3;
  const BivarPoly back = pow(t + 1, 2);
  SequencePair s;
  s.a = {BivarPoly(1), u + Rational(3) * t + 4};
  s.b = {BivarPoly(0), BivarPoly(1)};
  for (int k = 2; k <= k_max; ++k) s.a.push_back(step * s.a[k - 1] - back * s.a[k - 2]);
  for (int k = 1; k <= k_max; ++k) s.b.push_back(step * s.b[k] - back * s.b[k - 1]);
  return s;
}

BivarPoly matchings_weight_sum(MatchingGraph graph, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidParams, "k must be at least 1");
  const int vertices = 2 * k + 1;
  const int edges = graph == MatchingGraph::cycle ? vertices : vertices - 1;
  const BivarPoly matched = BivarPoly::t() + 1;
  const BivarPoly unmatched = BivarPoly::u() + 1;
  // Edge e joins vertices e and (e + 1) mod vertices.
  std::vector<Integer> by_size(static_cast<std::size_t>(k) + 1, 0);
  for (std::uint32_t subset = 0; subset < (1u << edges); ++subset) {
    std::uint32_t used = 0;
    bool matching = true;
    for (int e = 0; e < edges && matching; ++e) {
      if (!(subset >> e & 1u)) continue;
      const std::uint32_t ends = (1u << e) | (1u << ((e + 1) % vertices));
      matching = (used & ends) == 0;
      used |= ends;
    }
    if (matching) by_size[static_cast<std::size_t>(__builtin_popcount(subset))] += 1;
  }
  BivarPoly total;
  for (int m = 0; m <= k; ++m)
    if (by_size[m] != 0)
      total += Rational(by_size[m]) * (pow(matched, static_cast<unsigned>(m)) * pow(unmatched, static_cast<unsigned>(k - m)));
  return total;
}

std::string default_fixture_dir() { return std::string(DASEP_DATA_DIR) + "/oeis"; }

namespace {

std::vector<Integer> read_fixture(const std::string& dir, const std::string& name, std::size_t needed) {
  const std::string path = dir + "/" + name + ".txt";
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::FixtureMissing, "cannot open " + path);
  std::vector<Integer> values;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    try {
      values.emplace_back(line);
    } catch (const std::invalid_argument&) {
      throw Error(ErrorCode::ParseError, path + ": not an integer: " + line);
    }
  }
  if (values.size() < needed)
    throw Error(ErrorCode::FixtureMissing, path + " has " + std::to_string(values.size()) + " terms, need " +
                                               std::to_string(needed));
  return values;
}

}  // namespace

Report oeis_specialization(int k_max, const std::string& fixture_dir) {
  Report report("oeis_specialization", {{"k_max", k_max}});
  const auto trinomial_lucas = read_fixture(fixture_dir, "A082762", static_cast<std::size_t>(k_max) + 1);
  // Offset 0 starts 0, 1, 6, ...; b_k(1,1) is the term at index k + 1.
  const auto sqrt5_convergents = read_fixture(fixture_dir, "A084326", static_cast<std::size_t>(k_max) + 2);
  const SequencePair s = seq_ab(k_max);
  for (int k = 0; k <= k_max; ++k) {
    const Rational a1 = s.a_at(k).eval(1, 1);
    const Rational b1 = s.b_at(k).eval(1, 1);
    if (a1 != Rational(trinomial_lucas[k]))
      report.fail("a_" + std::to_string(k) + "(1,1) = " + a1.to_string() + ", A082762 gives " +
                  trinomial_lucas[k].get_str());
    if (b1 != Rational(sqrt5_convergents[k + 1]))
      report.fail("b_" + std::to_string(k) + "(1,1) = " + b1.to_string() + ", A084326 gives " +
                  sqrt5_convergents[k + 1].get_str());
  }
  if (report.pass) report.note("a_k(1,1), b_k(1,1) match for k <= " + std::to_string(k_max));
  return report;
}

}  // namespace dasep
