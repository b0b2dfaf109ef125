#include "dasep/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dasep/error.hpp"
#include "json.hpp"

namespace dasep {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t chain_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mixer(seed ^ (index * 0xd1b54a32d192ed03ULL));
  return mixer.next();
}

Distribution EmpiricalDistribution::frequencies() const {
  Distribution d{states, std::vector<double>(counts.size(), 0.0)};
  if (samples == 0) return d;
  for (std::size_t i = 0; i < counts.size(); ++i) d.probs[i] = static_cast<double>(counts[i]) / static_cast<double>(samples);
  return d;
}

std::string EmpiricalDistribution::to_csv() const {
  std::ostringstream out;
  out << "state,count,frequency\n";
  const Distribution f = frequencies();
  out.precision(10);
  for (std::size_t i = 0; i < states.size(); ++i) out << states[i] << ',' << counts[i] << ',' << f.probs[i] << '\n';
  return out.str();
}

namespace {

/// Cumulative transition probabilities of one row; the remaining mass is the self-loop.
struct CumulativeRow {
  std::vector<double> cumulative;
  std::vector<std::size_t> targets;
};

std::vector<CumulativeRow> cumulative_rows(const TransitionSystem& sys, const Rational& u0, const Rational& t0) {
  std::vector<CumulativeRow> rows(sys.size());
  const Rational scale(sys.scale());
  for (std::size_t i = 0; i < sys.size(); ++i) {
    Rational acc;
    for (const auto& [j, rate] : sys.row(i)) {
      const Rational r = rate.eval(u0, t0) / scale;
      if (r.is_zero()) continue;
      acc += r;
      rows[i].cumulative.push_back(acc.to_double());
      rows[i].targets.push_back(j);
    }
  }
  return rows;
}

}  // namespace

EmpiricalDistribution simulate(const TransitionSystem& sys, const SimConfig& cfg) {
  if (cfg.steps <= cfg.burn_in) throw Error(ErrorCode::InvalidParams, "steps must exceed burn_in");
  if (cfg.thinning == 0) throw Error(ErrorCode::InvalidParams, "thinning must be at least 1");
  if (cfg.chains == 0) throw Error(ErrorCode::InvalidParams, "at least one chain is needed");
  check_stochastic(sys, cfg.u0, cfg.t0);

  std::size_t start = 0;
  if (cfg.start) {
    const auto idx = sys.index_of(*cfg.start);
    if (!idx) throw Error(ErrorCode::InvalidParams, "unknown start state " + *cfg.start);
    start = *idx;
  }
  const auto rows = cumulative_rows(sys, cfg.u0, cfg.t0);

  EmpiricalDistribution result;
  result.states = sys.states();
  result.counts.assign(sys.size(), 0);
  for (std::uint32_t c = 0; c < cfg.chains; ++c) {
    SplitMix64 rng(chain_seed(cfg.seed, c));
    std::size_t state = start;
    for (std::uint64_t step = 1; step <= cfg.steps; ++step) {
      const double draw = rng.uniform();
      const CumulativeRow& row = rows[state];
      const auto it = std::upper_bound(row.cumulative.begin(), row.cumulative.end(), draw);
      if (it != row.cumulative.end()) state = row.targets[static_cast<std::size_t>(it - row.cumulative.begin())];
      if (step > cfg.burn_in && (step - cfg.burn_in) % cfg.thinning == 0) {
        ++result.counts[state];
        ++result.samples;
      }
    }
  }
  return result;
}

double tv_distance(const Distribution& a, const Distribution& b) {
  if (a.states != b.states || a.probs.size() != b.probs.size())
    throw Error(ErrorCode::IndexMismatch, "distributions are indexed differently");
  double l1 = 0;
  for (std::size_t i = 0; i < a.probs.size(); ++i) l1 += std::abs(a.probs[i] - b.probs[i]);
  return l1 / 2;
}

Distribution exact_distribution(const StationaryVector& pi, const Rational& u0, const Rational& t0) {
  const StationaryVector normalized = evaluate_normalized(pi, u0, t0);
  Distribution d{normalized.states, {}};
  d.probs.reserve(normalized.values.size());
  for (const auto& v : normalized.values) d.probs.push_back(v.to_double());
  return d;
}

std::string simulation_summary_json(const TransitionSystem& sys, const SimConfig& cfg,
                                    const EmpiricalDistribution& result, const std::optional<Distribution>& reference) {
  nlohmann::ordered_json out;
  out["chain"] = to_string(sys.kind());
  out["n"] = sys.params().n;
  out["p"] = sys.params().p;
  out["q"] = sys.params().q;
  out["u0"] = cfg.u0.to_string();
  out["t0"] = cfg.t0.to_string();
  out["steps"] = cfg.steps;
  out["burn_in"] = cfg.burn_in;
  out["thinning"] = cfg.thinning;
  out["seed"] = cfg.seed;
  out["chains"] = cfg.chains;
  out["rng"] = "splitmix64";
  out["samples"] = result.samples;
  if (reference) out["tv"] = tv_distance(result.frequencies(), *reference);
  return out.dump(2);
}

}  // namespace dasep
