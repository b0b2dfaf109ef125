#include <string>

#include "dasep/combinatorics.hpp"
#include "dasep/error.hpp"
#include "dasep/theorems.hpp"

namespace dasep {

StationaryVector closed_form_n22(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidN, "closed form needs n >= 3, got " + std::to_string(n));
  const bool odd = n % 2 == 1;
  const int k = odd ? (n - 1) / 2 : (n - 2) / 2;
  const SequencePair seq = seq_ab(std::max(k, 1));
  auto s = [&](int index) -> const BivarPoly& { return odd ? seq.a_at(index) : seq.b_at(index); };

  const BivarPoly u = BivarPoly::u();
  const BivarPoly t = BivarPoly::t();
  const BivarPoly u_sq = u * u;
  const BivarPoly twist = u * (t - 1);

  std::vector<std::string> labels;
  std::vector<BivarPoly> entries;
  for (const Word& mu : enumerate_gamma(n, 2, 2)) {
    int one = -1, two = -1, ones = 0;
    for (int i = 0; i < n; ++i) {
      if (mu[i] == 1) {
        one = i;
        ++ones;
      } else if (mu[i] == 2) {
        two = i;
      }
    }
    BivarPoly value;
    if (ones == 2) {
      value = s(k);
    } else if (ones == 0) {
      value = u_sq * s(k);
    } else {
      // Zeros met reading cyclically rightward from the 1 to the 2.
      const int gap = (two - one + n) % n - 1;
      const bool plus = odd ? gap < k : gap <= k;
      const int m = plus ? gap : n - 2 - gap;
      const BivarPoly correction = twist * pow(t + 1, static_cast<unsigned>(m)) * s(k - m - 1);
      value = plus ? u * s(k) + correction : u * s(k) - correction;
    }
    labels.push_back(mu.to_string());
    entries.push_back(std::move(value));
  }
  return StationaryVector::symbolic(std::move(labels), std::move(entries));
}

Report verify_n22(int n, const SolverOptions& options) {
  Report report("n22_closed_form", {{"n", n}});
  const TransitionSystem sys = build_dasep(n, 2, 2);
  const StationaryVector closed = closed_form_n22(n);
  const BalanceReport balance = verify_balance(sys, closed);
  if (!balance.pass) {
    for (const auto& [state, residual] : balance.nonzero)
      report.fail("balance residual at " + state + ": " + residual.to_string());
  } else {
    report.note("balance residual identically zero on " + std::to_string(sys.size()) + " states");
  }
  if (n <= 8) {
    const StationaryVector solved = solve_stationary_symbolic(sys, options);
    const StationaryVector normalized = normalize_gcd_one(closed);
    if (solved.states != normalized.states) throw Error(ErrorCode::IndexMismatch, "state orders differ");
    std::size_t differing = 0;
    for (std::size_t i = 0; i < solved.size(); ++i)
      if (solved.polys[i] != normalized.polys[i]) {
        ++differing;
        report.fail(solved.states[i] + ": closed form " + normalized.polys[i].to_string() + ", solver " +
                    solved.polys[i].to_string());
      }
    if (differing == 0) report.note("closed form equals the solver output after normalization");
  }
  return report;
}

}  // namespace dasep
