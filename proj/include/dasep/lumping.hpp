#pragma once

#include <string>
#include <vector>

#include "dasep/chains.hpp"
#include "dasep/stationary.hpp"

namespace dasep {

/// Surjective assignment of source states to target states.
class LumpingMap {
 public:
  /// Throws InvalidParams when the assignment is not total or not surjective.
  LumpingMap(const TransitionSystem& source, const TransitionSystem& target, std::vector<std::size_t> assignment);

  const TransitionSystem& source() const { return *source_; }
  const TransitionSystem& target() const { return *target_; }
  const std::vector<std::size_t>& assignment() const { return assignment_; }
  std::size_t operator()(std::size_t x) const { return assignment_[x]; }
  std::vector<std::size_t> fiber_sizes() const;

 private:
  const TransitionSystem* source_;
  const TransitionSystem* target_;
  std::vector<std::size_t> assignment_;
};

/// mu -> (w, lambda) from a DASEP onto the colored Boolean process.
LumpingMap decompose_map(const TransitionSystem& dasep, const TransitionSystem& cbp);
/// (w, lambda) -> lambda from the colored Boolean process onto the growth model.
LumpingMap shape_map(const TransitionSystem& cbp, const TransitionSystem& rrg);

struct LumpingViolation {
  std::string y0, y1, x0;
  BivarPoly expected;  // target rate Q(y0, y1)
  BivarPoly found;     // fiber sum of P(x0, .)
};

struct LumpingReport {
  bool pass = true;
  std::size_t violation_count = 0;
  std::vector<LumpingViolation> violations;  // first 10

  std::string to_json() const;
};

/// Symbolic check of sum_{x: f(x) = y1} P(x0, x) = Q(f(x0), y1), diagonals
/// included. Throws ScaleMismatch when the two systems use different scales.
LumpingReport verify_lumping(const LumpingMap& map);

/// Fiber sums of a source-indexed vector; no renormalization.
StationaryVector push_distribution(const LumpingMap& map, const StationaryVector& pi);

}  // namespace dasep
