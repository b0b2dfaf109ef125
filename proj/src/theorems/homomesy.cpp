#include <map>
#include <string>

#include "dasep/combinatorics.hpp"
#include "dasep/error.hpp"
#include "dasep/theorems.hpp"

namespace dasep {

std::string to_string(GroupAction action) {
  return action == GroupAction::permute_particles ? "permute_particles" : "permute_sites";
}

std::vector<OrbitReport> homomesy_check(const TransitionSystem& dasep, const StationaryVector& pi,
                                        GroupAction action) {
  if (dasep.kind() != ChainKind::dasep) throw Error(ErrorCode::InvalidParams, "homomesy is checked on DASEP chains");
  if (pi.mode != StationaryVector::Mode::symbolic || pi.states != dasep.states())
    throw Error(ErrorCode::IndexMismatch, "expected a symbolic vector indexed by the chain's states");
  const int q = dasep.params().q;

  struct Orbit {
    Partition shape;
    BivarPoly sum;
    long size = 0;
  };
  std::map<std::string, Orbit> orbits;
  std::optional<BivarPoly> constant;
  for (std::size_t i = 0; i < dasep.size(); ++i) {
    const CbpState c = decompose(Word::parse(dasep.state(i)));
    if (!constant && c.shape == ones(q)) constant = pi.polys[i];
    const std::string key = action == GroupAction::permute_particles ? c.to_string() : c.shape.to_string();
    Orbit& o = orbits[key];
    o.shape = c.shape;
    o.sum += pi.polys[i];
    ++o.size;
  }

  std::vector<OrbitReport> reports;
  for (const auto& [key, o] : orbits) {
    OrbitReport r;
    r.orbit = key;
    r.sum = o.sum;
    r.size = o.size;
    const int e = o.shape.weight() - q;
    r.factor = Monomial{static_cast<std::uint32_t>(e), 0};
    const BivarPoly average = o.sum * Rational(Integer(1), r.size);
    const BivarPoly scale = BivarPoly::monomial(r.factor);
    try {
      r.constant = poly_exact_div(average, scale);
    } catch (const Error&) {
      r.constant = average;  // the u-power does not divide: reported as a failure
    }
    r.pass = average == scale * *constant;
    reports.push_back(std::move(r));
  }
  return reports;
}

std::vector<OrbitReport> homomesy_check(int n, int p, int q, GroupAction action, const SolverOptions& options) {
  const TransitionSystem sys = build_dasep(n, p, q);
  return homomesy_check(sys, solve_stationary_symbolic(sys, options), action);
}

Report summarize_homomesy(const std::vector<OrbitReport>& orbits, GroupAction action, const ChainParams& params) {
  Report report("homomesy_" + to_string(action), {{"n", params.n}, {"p", params.p}, {"q", params.q}});
  for (const auto& o : orbits) {
    if (!o.pass)
      report.fail("orbit " + o.orbit + ": average " + (o.sum * Rational(Integer(1), o.size)).to_string() +
                  " is not u^" + std::to_string(o.factor.eu) + " * " + orbits.front().constant.to_string());
    if (o.constant != orbits.front().constant)
      report.fail("orbit " + o.orbit + " constant " + o.constant.to_string() + " differs from " +
                  orbits.front().constant.to_string());
  }
  if (report.pass && !orbits.empty())
    report.note(std::to_string(orbits.size()) + " orbits average to u^{|lambda|-q} * " +
                orbits.front().constant.to_string());
  return report;
}

}  // namespace dasep
