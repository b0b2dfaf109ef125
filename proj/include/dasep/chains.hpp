#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dasep/algebra/bivar_poly.hpp"

namespace dasep {

enum class ChainKind { dasep, cbp, rrg };

std::string to_string(ChainKind kind);
ChainKind parse_chain_kind(std::string_view name);

struct ChainParams {
  int n = 0;
  int p = 0;
  int q = 0;

  friend bool operator==(const ChainParams&, const ChainParams&) = default;
};

/// Finite discrete-time chain with polynomial rates stored scaled by 3n.
///
/// Only off-diagonal entries are stored. The diagonal is implicit:
/// scale - (sum of the row's stored rates).
class TransitionSystem {
 public:
  using Row = std::map<std::size_t, BivarPoly>;

  TransitionSystem(ChainKind kind, ChainParams params, int scale, std::vector<std::string> states);

  ChainKind kind() const { return kind_; }
  const ChainParams& params() const { return params_; }
  int scale() const { return scale_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<std::string>& states() const { return states_; }
  const std::string& state(std::size_t i) const { return states_[i]; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  const Row& row(std::size_t from) const { return rows_[from]; }
  /// Scaled off-diagonal rate, zero when absent; the diagonal is reported by diagonal().
  BivarPoly rate(std::size_t from, std::size_t to) const;
  /// Sum of the stored off-diagonal rates out of `from`.
  BivarPoly out_rate(std::size_t from) const;
  /// scale - out_rate(from)
  BivarPoly diagonal(std::size_t from) const;
  std::size_t edge_count() const;

  /// Adds to the rate of an ordered pair; moves landing on the same pair are
  /// summed. Self-loops are rejected since the diagonal is implicit.
  void add_rate(std::size_t from, std::size_t to, const BivarPoly& scaled_rate);

  /// True when some ordered pair received more than one move (happens at n = 2,
  /// where the interior and wrap-around swaps coincide).
  bool has_merged_moves() const { return merged_moves_; }

 private:
  ChainKind kind_;
  ChainParams params_;
  int scale_;
  std::vector<std::string> states_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Row> rows_;
  bool merged_moves_ = false;
};

TransitionSystem build_dasep(int n, int p, int q);
TransitionSystem build_cbp(int n, int p, int q);
TransitionSystem build_rrg(int n, int p, int q);
TransitionSystem build_chain(ChainKind kind, int n, int p, int q);

struct StochasticReport {
  std::size_t rows_checked = 0;
  Rational min_diagonal;
};

/// Confirms that every row of P(u0, t0) is a probability vector. Throws
/// Error(NotStochastic) naming the first offending row.
StochasticReport check_stochastic(const TransitionSystem& sys, const Rational& u0, const Rational& t0);

/// Strong connectivity of the graph of stored (nonzero) rates.
bool check_irreducible(const TransitionSystem& sys);

/// Graphviz digraph; edge labels are the scaled rates written over 3n.
std::string export_dot(const TransitionSystem& sys);

/// {"kind", "n", "p", "q", "scale", "merged_moves", "edges": [{from, to, rate, scale}]}
std::string export_matrix_json(const TransitionSystem& sys);

}  // namespace dasep
