#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dasep/chains.hpp"
#include "dasep/stationary.hpp"

namespace dasep {

/// SplitMix64 (Steele, Lea, Flood 2014): a 64-bit counter passed through a
/// fixed mixing function. Streams for parallel chains come from distinct seeds.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Seed of the stream for chain `index` under master seed `seed`.
std::uint64_t chain_seed(std::uint64_t seed, std::uint64_t index);

struct SimConfig {
  Rational u0{1};
  Rational t0{1};
  std::uint64_t steps = 1'000'000;
  std::uint64_t burn_in = 0;
  std::uint64_t thinning = 1;
  std::uint64_t seed = 1;
  /// Independent chains, each run for `steps` steps; counts are pooled.
  std::uint32_t chains = 1;
  /// Start state label; the first state (all particles of species 1) when empty.
  std::optional<std::string> start;
};

struct Distribution {
  std::vector<std::string> states;
  std::vector<double> probs;
};

struct EmpiricalDistribution {
  std::vector<std::string> states;
  std::vector<std::uint64_t> counts;
  std::uint64_t samples = 0;

  Distribution frequencies() const;
  /// "state,count,frequency" rows with a header line.
  std::string to_csv() const;
};

/// Runs the discrete-time chain at (u0, t0), self-loops included. Throws
/// Error(NotStochastic) when P(u0, t0) is not stochastic and InvalidParams on
/// a bad configuration.
EmpiricalDistribution simulate(const TransitionSystem& sys, const SimConfig& cfg);

/// Half the L1 distance; throws Error(IndexMismatch) unless both share one index.
double tv_distance(const Distribution& a, const Distribution& b);

/// Exact stationary probabilities at (u0, t0) converted to double.
Distribution exact_distribution(const StationaryVector& pi, const Rational& u0, const Rational& t0);

/// JSON summary of a run; includes "tv" when a reference is supplied.
std::string simulation_summary_json(const TransitionSystem& sys, const SimConfig& cfg,
                                    const EmpiricalDistribution& result,
                                    const std::optional<Distribution>& reference = std::nullopt);

}  // namespace dasep
