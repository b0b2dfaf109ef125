#include "dasep/combinatorics.hpp"
#include "dasep/error.hpp"
#include "dasep/stationary.hpp"

namespace dasep {

namespace {

constexpr std::size_t kReportedResiduals = 10;

void require_indexed(const TransitionSystem& sys, const StationaryVector& v, StationaryVector::Mode mode) {
  if (v.states != sys.states())
    throw Error(ErrorCode::IndexMismatch, "candidate is not indexed by the system's states");
  if (v.mode != mode)
    throw Error(ErrorCode::IndexMismatch,
                mode == StationaryVector::Mode::symbolic ? "expected a symbolic vector" : "expected a point vector");
}

}  // namespace

BalanceReport verify_balance(const TransitionSystem& sys, const StationaryVector& candidate) {
  require_indexed(sys, candidate, StationaryVector::Mode::symbolic);
  const std::size_t n = sys.size();
  std::vector<BivarPoly> residual(n);
  for (std::size_t j = 0; j < n; ++j) {
    const BivarPoly& xj = candidate.polys[j];
    if (xj.is_zero()) continue;
    for (const auto& [k, rate] : sys.row(j)) residual[k] += xj * rate;
    residual[j] -= xj * sys.out_rate(j);
  }
  BalanceReport report;
  for (std::size_t k = 0; k < n; ++k) {
    if (residual[k].is_zero()) continue;
    report.pass = false;
    ++report.nonzero_count;
    if (report.nonzero.size() < kReportedResiduals) report.nonzero.emplace_back(sys.state(k), residual[k]);
  }
  return report;
}

bool verify_balance_at_point(const TransitionSystem& sys, const StationaryVector& candidate) {
  require_indexed(sys, candidate, StationaryVector::Mode::point);
  if (!candidate.point) throw Error(ErrorCode::InvalidParams, "point vector without its evaluation point");
  const auto& [u0, t0] = *candidate.point;
  const std::size_t n = sys.size();
  std::vector<Rational> residual(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Rational& xj = candidate.values[j];
    if (xj.is_zero()) continue;
    Rational out;
    for (const auto& [k, rate] : sys.row(j)) {
      const Rational r = rate.eval(u0, t0);
      residual[k] += xj * r;
      out += r;
    }
    residual[j] -= xj * out;
  }
  for (const auto& r : residual)
    if (!r.is_zero()) return false;
  return true;
}

bool check_cyclic_invariance(const TransitionSystem& sys, const StationaryVector& pi) {
  if (sys.kind() != ChainKind::dasep) throw Error(ErrorCode::InvalidParams, "cyclic invariance applies to DASEP chains");
  if (pi.states != sys.states()) throw Error(ErrorCode::IndexMismatch, "vector is not indexed by the system's states");
  // Invariance under the one-step rotation implies invariance under all of them.
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const std::string rotated = Word::parse(sys.state(i)).rotated_left(1).to_string();
    const auto j = sys.index_of(rotated);
    if (!j) return false;
    const bool same = pi.mode == StationaryVector::Mode::symbolic ? pi.polys[i] == pi.polys[*j]
                                                                  : pi.values[i] == pi.values[*j];
    if (!same) return false;
  }
  return true;
}

}  // namespace dasep
