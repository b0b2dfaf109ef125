#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dasep/algebra/bivar_poly.hpp"
#include "dasep/chains.hpp"

namespace dasep {

enum class Normalization { gcd_one, prob_one, unnormalized };

/// Per-state stationary weights, either polynomials in (u,t) or exact values
/// at one point.
struct StationaryVector {
  enum class Mode { symbolic, point };

  std::vector<std::string> states;
  Mode mode = Mode::symbolic;
  Normalization normalization = Normalization::unnormalized;
  std::vector<BivarPoly> polys;   // symbolic mode
  std::vector<Rational> values;   // point mode
  std::optional<std::pair<Rational, Rational>> point;  // (u0, t0) in point mode

  std::size_t size() const { return states.size(); }
  std::optional<std::size_t> index_of(const std::string& label) const;
  const BivarPoly& operator[](const std::string& label) const;

  static StationaryVector symbolic(std::vector<std::string> states, std::vector<BivarPoly> polys,
                                   Normalization norm = Normalization::unnormalized);

  /// JSON object state -> polynomial string (symbolic) or "p/q" (point).
  std::string to_json() const;
  static StationaryVector from_json(const std::string& text);
};

/// Divides by the polynomial gcd of the entries and by the integer content,
/// then fixes the sign so the entries are positive at u = t = 1.
StationaryVector normalize_gcd_one(StationaryVector v);

/// Evaluates a symbolic vector at a point and rescales it to sum to 1.
StationaryVector evaluate_normalized(const StationaryVector& v, const Rational& u0, const Rational& t0);

struct SolverOptions {
  std::size_t state_cap = 400;
  std::uint32_t degree_cap = kDefaultDegreeCap;
  std::uint64_t seed = 0x5eed5eedULL;

  /// Defaults overridden by DASEP_STATE_CAP and DASEP_DEGREE_CAP when set.
  static SolverOptions from_env();
};

/// Exact left kernel of (scaled_P - scale*I) over Q[u,t], gcd-1 normalized.
StationaryVector solve_stationary_symbolic(const TransitionSystem& sys, const SolverOptions& options = {});

/// Exact rational stationary distribution at (u0, t0), summing to 1.
StationaryVector solve_stationary_at_point(const TransitionSystem& sys, const Rational& u0, const Rational& t0,
                                           std::size_t state_cap = 100000);

struct BalanceReport {
  bool pass = true;
  std::size_t nonzero_count = 0;
  /// First residual components that are not identically zero: (state, residual).
  std::vector<std::pair<std::string, BivarPoly>> nonzero;
};

/// Residual candidate^T (scaled_P - scale*I), checked to vanish identically.
BalanceReport verify_balance(const TransitionSystem& sys, const StationaryVector& candidate);

/// Point-mode residual, exact at the vector's stored point.
bool verify_balance_at_point(const TransitionSystem& sys, const StationaryVector& candidate);

/// pi(mu) = pi(rotate(mu)) for every DASEP state and every rotation.
bool check_cyclic_invariance(const TransitionSystem& sys, const StationaryVector& pi);

}  // namespace dasep
