#include <map>
#include <string>

#include "dasep/combinatorics.hpp"
#include "dasep/error.hpp"
#include "dasep/theorems.hpp"

namespace dasep {

namespace {

std::vector<std::pair<std::string, long>> params_of(const ChainParams& p) {
  return {{"n", p.n}, {"p", p.p}, {"q", p.q}};
}

void require(const TransitionSystem& sys, const StationaryVector& pi, ChainKind kind) {
  if (sys.kind() != kind)
    throw Error(ErrorCode::InvalidParams, "expected a " + to_string(kind) + " chain, got " + to_string(sys.kind()));
  if (pi.mode != StationaryVector::Mode::symbolic || pi.states != sys.states())
    throw Error(ErrorCode::IndexMismatch, "expected a symbolic vector indexed by the chain's states");
}

BivarPoly u_power(int e) { return pow(BivarPoly::u(), static_cast<unsigned>(e)); }

/// u^{|lambda|-q} multinomial(q; m_1, ..., m_p)
BivarPoly fiber_factor(const Partition& lambda) {
  std::vector<int> m;
  for (int i = 1; i <= lambda.largest(); ++i) m.push_back(lambda.multiplicity(i));
  return Rational(multinomial(m)) * u_power(lambda.weight() - lambda.length());
}

/// Equality check that records a witness on failure; returns the outcome.
bool expect_equal(Report& report, const std::string& what, const BivarPoly& lhs, const BivarPoly& rhs) {
  if (lhs == rhs) return true;
  report.fail(what + ": " + lhs.to_string() + " != " + rhs.to_string());
  return false;
}

/// Cross-multiplied ratio identity between two partition-indexed quantities.
void check_ratios(Report& report, const std::map<Partition, BivarPoly>& sums, int n) {
  std::size_t checked = 0;
  for (auto a = sums.begin(); a != sums.end(); ++a)
    for (auto b = std::next(a); b != sums.end(); ++b) {
      const auto& [lambda, sum_lambda] = *a;
      const auto& [mu, sum_mu] = *b;
      const Rational size_lambda(count_arrangements(lambda, n, ArrangementMode::all));
      const Rational size_mu(count_arrangements(mu, n, ArrangementMode::all));
      const BivarPoly lhs = sum_lambda * size_mu * u_power(mu.weight());
      const BivarPoly rhs = sum_mu * size_lambda * u_power(lambda.weight());
      expect_equal(report, "ratio " + lambda.to_string() + " / " + mu.to_string(), lhs, rhs);
      ++checked;
    }
  if (report.pass) report.note(std::to_string(checked) + " partition pairs satisfy the cross-multiplied ratio");
}

}  // namespace

Report verify_main_theorem(const TransitionSystem& dasep, const StationaryVector& pi) {
  require(dasep, pi, ChainKind::dasep);
  Report report("main_theorem", params_of(dasep.params()));
  std::map<std::string, BivarPoly> fiber_sums;
  std::map<std::string, CbpState> fibers;
  std::optional<std::size_t> first_word;
  for (std::size_t i = 0; i < dasep.size(); ++i) {
    const CbpState c = decompose(Word::parse(dasep.state(i)));
    const std::string key = c.to_string();
    fiber_sums[key] += pi.polys[i];
    fibers.emplace(key, c);
    if (c.shape == ones(dasep.params().q)) {
      if (!first_word) first_word = i;
      expect_equal(report, "binary words " + dasep.state(*first_word) + " and " + dasep.state(i),
                   pi.polys[*first_word], pi.polys[i]);
    }
  }
  for (const auto& [key, sum] : fiber_sums) {
    const CbpState& c = fibers.at(key);
    const BivarPoly& word_value = pi.polys[*dasep.index_of(c.word.to_string())];
    expect_equal(report, "fiber sum over " + key, sum, fiber_factor(c.shape) * word_value);
  }
  if (report.pass)
    report.note(std::to_string(fiber_sums.size()) + " fibers S_n^w(lambda) match u^{|lambda|-q} multinomial pi(w)");
  return report;
}

Report verify_main_theorem(int n, int p, int q, const SolverOptions& options) {
  const TransitionSystem sys = build_dasep(n, p, q);
  return verify_main_theorem(sys, solve_stationary_symbolic(sys, options));
}

Report verify_ratio_corollary(const TransitionSystem& dasep, const StationaryVector& pi) {
  require(dasep, pi, ChainKind::dasep);
  Report report("ratio_corollary", params_of(dasep.params()));
  std::map<Partition, BivarPoly> sums;
  for (std::size_t i = 0; i < dasep.size(); ++i) sums[decompose(Word::parse(dasep.state(i))).shape] += pi.polys[i];
  check_ratios(report, sums, dasep.params().n);
  return report;
}

Report verify_rrg_ratios(const TransitionSystem& rrg, const StationaryVector& pi) {
  require(rrg, pi, ChainKind::rrg);
  Report report("rrg_ratios", params_of(rrg.params()));
  std::map<Partition, BivarPoly> values;
  for (std::size_t i = 0; i < rrg.size(); ++i) values[Partition::parse(rrg.state(i))] = pi.polys[i];
  check_ratios(report, values, rrg.params().n);
  return report;
}

Report verify_ratio_corollary(int n, int p, int q, const SolverOptions& options) {
  const TransitionSystem dasep = build_dasep(n, p, q);
  Report report = verify_ratio_corollary(dasep, solve_stationary_symbolic(dasep, options));
  const TransitionSystem rrg = build_rrg(n, p, q);
  report.absorb(verify_rrg_ratios(rrg, solve_stationary_symbolic(rrg, options)));
  return report;
}

Report verify_cbp_closed_form(const TransitionSystem& cbp, const StationaryVector& pi) {
  require(cbp, pi, ChainKind::cbp);
  Report report("cbp_closed_form", params_of(cbp.params()));
  const Partition base_shape = ones(cbp.params().q);
  std::optional<BivarPoly> common;
  for (std::size_t i = 0; i < cbp.size(); ++i) {
    const CbpState c = CbpState::parse(cbp.state(i));
    const std::string base_label = CbpState{c.word, base_shape}.to_string();
    const BivarPoly& base = pi.polys[*cbp.index_of(base_label)];
    if (!common) common = base;
    expect_equal(report, "binary-word entry " + base_label, base, *common);
    expect_equal(report, cbp.state(i), pi.polys[i], fiber_factor(c.shape) * base);
  }
  if (report.pass) report.note("all " + std::to_string(cbp.size()) + " entries follow the multinomial closed form");
  return report;
}

Report verify_pushforward(const LumpingMap& map, const StationaryVector& source_pi, const StationaryVector& target_pi) {
  Report report("pushforward_" + to_string(map.source().kind()) + "_to_" + to_string(map.target().kind()),
                params_of(map.source().params()));
  if (target_pi.states != map.target().states() || target_pi.mode != StationaryVector::Mode::symbolic)
    throw Error(ErrorCode::IndexMismatch, "target vector is not indexed by the lumping target");
  const StationaryVector pushed = push_distribution(map, source_pi);
  std::size_t ref = 0;
  while (ref < pushed.size() && (pushed.polys[ref].is_zero() || target_pi.polys[ref].is_zero())) ++ref;
  if (ref == pushed.size()) {
    report.fail("no state where both vectors are nonzero");
    return report;
  }
  for (std::size_t i = 0; i < pushed.size(); ++i)
    expect_equal(report, "proportionality at " + pushed.states[i], pushed.polys[i] * target_pi.polys[ref],
                 target_pi.polys[i] * pushed.polys[ref]);
  if (report.pass) report.note("fiber sums are proportional to the target solution");
  return report;
}

Report verify_cbp_closed_form(int n, int p, int q, const SolverOptions& options) {
  const TransitionSystem cbp = build_cbp(n, p, q);
  const StationaryVector pi_cbp = solve_stationary_symbolic(cbp, options);
  Report report = verify_cbp_closed_form(cbp, pi_cbp);
  const TransitionSystem dasep = build_dasep(n, p, q);
  report.absorb(verify_pushforward(decompose_map(dasep, cbp), solve_stationary_symbolic(dasep, options), pi_cbp));
  return report;
}

Report verify_uniform(const TransitionSystem& dasep, const StationaryVector& pi) {
  require(dasep, pi, ChainKind::dasep);
  Report report("uniform_single_species", params_of(dasep.params()));
  for (std::size_t i = 1; i < pi.size(); ++i)
    expect_equal(report, pi.states[i] + " vs " + pi.states[0], pi.polys[i], pi.polys[0]);
  if (report.pass) report.note("all " + std::to_string(pi.size()) + " entries equal " + pi.polys[0].to_string());
  return report;
}

Report verify_single_particle(const TransitionSystem& dasep, const StationaryVector& pi) {
  require(dasep, pi, ChainKind::dasep);
  if (dasep.params().q != 1) throw Error(ErrorCode::InvalidParams, "single-particle check needs q = 1");
  Report report("single_particle_powers", params_of(dasep.params()));
  std::optional<BivarPoly> constant;
  for (std::size_t i = 0; i < dasep.size(); ++i) {
    const Word w = Word::parse(dasep.state(i));
    int species = 0;
    for (int k = 0; k < w.length(); ++k) species = std::max<int>(species, w[k]);
    if (species == 1 && !constant) constant = pi.polys[i];
  }
  for (std::size_t i = 0; i < dasep.size(); ++i) {
    const Word w = Word::parse(dasep.state(i));
    int species = 0;
    for (int k = 0; k < w.length(); ++k) species = std::max<int>(species, w[k]);
    expect_equal(report, dasep.state(i), pi.polys[i], u_power(species - 1) * *constant);
  }
  if (report.pass) report.note("entries are u^{s-1} * " + constant->to_string());
  return report;
}

}  // namespace dasep
