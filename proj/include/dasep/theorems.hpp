#pragma once

#include <string>
#include <vector>

#include "dasep/chains.hpp"
#include "dasep/lumping.hpp"
#include "dasep/report.hpp"
#include "dasep/stationary.hpp"

namespace dasep {

/// The two polynomial sequences of the DASEP(n,2,2) closed form, both obeying
/// s_k = (u+2t+3) s_{k-1} - (t+1)^2 s_{k-2}.
struct SequencePair {
  std::vector<BivarPoly> a;  // a[k] for k = 0..k_max
  std::vector<BivarPoly> b;  // b[k + 1] for k = -1..k_max

  int k_max() const { return static_cast<int>(a.size()) - 1; }
  const BivarPoly& a_at(int k) const;
  /// k >= -1
  const BivarPoly& b_at(int k) const;
};

/// Throws InvalidParams when k_max < 1.
SequencePair seq_ab(int k_max);

/// Full stationary vector of DASEP(n,2,2) from the closed form; InvalidN when n < 3.
StationaryVector closed_form_n22(int n);

/// Balance check of the closed form, plus (n <= 8) equality with the solver.
Report verify_n22(int n, const SolverOptions& options = {});

/// Equal binary-word entries, and fiber sums over S_n^w(lambda) equal to
/// u^{|lambda|-q} multinomial(q; m) pi(w).
Report verify_main_theorem(int n, int p, int q, const SolverOptions& options = {});
Report verify_main_theorem(const TransitionSystem& dasep, const StationaryVector& pi);

/// Cross-multiplied sum_{S_n(lambda)} pi |S_n(mu)| u^{|mu|} = sum_{S_n(mu)} pi |S_n(lambda)| u^{|lambda|}
/// on the DASEP, and the same ratios on the growth model.
Report verify_ratio_corollary(int n, int p, int q, const SolverOptions& options = {});
Report verify_ratio_corollary(const TransitionSystem& dasep, const StationaryVector& pi);
Report verify_rrg_ratios(const TransitionSystem& rrg, const StationaryVector& pi);

/// Colored Boolean process entries against u^{|lambda|-q} multinomial(q; m) pi(w, 1^q),
/// plus proportionality with the pushed-forward DASEP solution.
Report verify_cbp_closed_form(int n, int p, int q, const SolverOptions& options = {});
Report verify_cbp_closed_form(const TransitionSystem& cbp, const StationaryVector& pi);

/// target_pi and the fiber sums of source_pi agree up to one global polynomial factor.
Report verify_pushforward(const LumpingMap& map, const StationaryVector& source_pi, const StationaryVector& target_pi);

/// DASEP(n,1,q): every entry equal.
Report verify_uniform(const TransitionSystem& dasep, const StationaryVector& pi);
/// DASEP(n,p,1): a species-s particle carries u^{s-1} times one common constant.
Report verify_single_particle(const TransitionSystem& dasep, const StationaryVector& pi);

enum class MatchingGraph { cycle, path };

/// Sum over all matchings M of C_{2k+1} (cycle) or L_{2k+1} (path) of
/// (t+1)^{|M|} (u+1)^{k-|M|}, by brute force over edge subsets.
BivarPoly matchings_weight_sum(MatchingGraph graph, int k);

/// Directory holding A082762.txt and A084326.txt.
std::string default_fixture_dir();

/// a_k(1,1) and b_k(1,1) for k <= k_max against the fixture sequences.
/// Throws FixtureMissing when a file is absent or too short.
Report oeis_specialization(int k_max, const std::string& fixture_dir = default_fixture_dir());

enum class GroupAction { permute_particles, permute_sites };

struct OrbitReport {
  std::string orbit;     // "w:(lambda)" or "(lambda)"
  BivarPoly sum;
  Integer size;
  Monomial factor;       // expected u^{|lambda|-q}
  BivarPoly constant;    // sum / (size * u^{factor}) when exact, else sum / size
  bool pass = false;
};

/// Orbit averages of pi_DASEP against u^{|lambda|-q} pi(binary word).
std::vector<OrbitReport> homomesy_check(int n, int p, int q, GroupAction action, const SolverOptions& options = {});
std::vector<OrbitReport> homomesy_check(const TransitionSystem& dasep, const StationaryVector& pi, GroupAction action);
/// Passes when every orbit passes and all orbit constants coincide.
Report summarize_homomesy(const std::vector<OrbitReport>& orbits, GroupAction action, const ChainParams& params);

std::string to_string(GroupAction action);

}  // namespace dasep
