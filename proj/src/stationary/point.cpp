#include <gmpxx.h>

#include <string>

#include "dasep/error.hpp"
#include "dasep/stationary.hpp"

namespace dasep {

StationaryVector solve_stationary_at_point(const TransitionSystem& sys, const Rational& u0, const Rational& t0,
                                           std::size_t state_cap) {
  const std::size_t n = sys.size();
  if (n > state_cap)
    throw Error(ErrorCode::StateCapExceeded,
                std::to_string(n) + " states exceed the cap of " + std::to_string(state_cap));
  if (u0.sign() <= 0 || t0.sign() < 0)
    throw Error(ErrorCode::InvalidParams, "point solver needs u0 > 0 and t0 >= 0");

  // Transposed generator with its last equation replaced by sum(x) = 1.
  std::vector<mpq_class> a(n * n);
  std::vector<mpq_class> rhs(n);
  for (std::size_t j = 0; j < n; ++j) {
    mpq_class out = 0;
    for (const auto& [k, rate] : sys.row(j)) {
      const mpq_class r = rate.eval(u0, t0).get();
      out += r;
      if (k != n - 1) a[k * n + j] += r;
    }
    if (j != n - 1) a[j * n + j] -= out;
  }
  for (std::size_t j = 0; j < n; ++j) a[(n - 1) * n + j] = 1;
  rhs[n - 1] = 1;

  std::vector<std::uint32_t> row_nnz(n, 0), col_nnz(n, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (sgn(a[r * n + c]) != 0) {
        ++row_nnz[r];
        ++col_nnz[c];
      }

  std::vector<bool> row_alive(n, true), col_alive(n, true);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  std::vector<std::size_t> targets, pivot_cols;
  mpq_class f, product;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pc = n;
    for (std::size_t c = 0; c < n; ++c)
      if (col_alive[c] && (pc == n || col_nnz[c] < col_nnz[pc])) pc = c;
    if (col_nnz[pc] == 0)
      throw Error(ErrorCode::KernelDimensionNotOne, "singular system at the requested point");
    std::size_t pr = n;
    targets.clear();
    for (std::size_t r = 0; r < n; ++r) {
      if (!row_alive[r] || sgn(a[r * n + pc]) == 0) continue;
      targets.push_back(r);
      if (pr == n || row_nnz[r] < row_nnz[pr]) pr = r;
    }
    pivot_cols.clear();
    for (std::size_t c = 0; c < n; ++c)
      if (col_alive[c] && c != pc && sgn(a[pr * n + c]) != 0) pivot_cols.push_back(c);
    for (std::size_t r : targets) {
      if (r == pr) continue;
      f = a[r * n + pc] / a[pr * n + pc];
      a[r * n + pc] = 0;
      --row_nnz[r];
      --col_nnz[pc];
      for (std::size_t c : pivot_cols) {
        mpq_class& cell = a[r * n + c];
        const bool was_zero = sgn(cell) == 0;
        product = f * a[pr * n + c];
        cell -= product;
        const bool is_zero = sgn(cell) == 0;
        if (was_zero && !is_zero) {
          ++row_nnz[r];
          ++col_nnz[c];
        } else if (!was_zero && is_zero) {
          --row_nnz[r];
          --col_nnz[c];
        }
      }
      if (sgn(rhs[pr]) != 0) rhs[r] -= f * rhs[pr];
    }
    for (std::size_t c : pivot_cols) --col_nnz[c];
    row_alive[pr] = false;
    col_alive[pc] = false;
    pivots.emplace_back(pr, pc);
  }

  // Columns eliminated later are still alive in earlier pivot rows, so solve in reverse.
  std::vector<mpq_class> x(n);
  std::vector<bool> solved(n, false);
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const auto [pr, pc] = pivots[k];
    mpq_class acc = rhs[pr];
    for (std::size_t c = 0; c < n; ++c)
      if (solved[c] && sgn(a[pr * n + c]) != 0) acc -= a[pr * n + c] * x[c];
    x[pc] = acc / a[pr * n + pc];
    solved[pc] = true;
  }

  StationaryVector v;
  v.states = sys.states();
  v.mode = StationaryVector::Mode::point;
  v.normalization = Normalization::prob_one;
  v.point = std::make_pair(u0, t0);
  v.values.reserve(n);
  for (auto& xi : x) v.values.emplace_back(xi);
  return v;
}

}  // namespace dasep
