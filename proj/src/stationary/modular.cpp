#include "stationary/modular.hpp"

#include <algorithm>
#include <limits>

namespace dasep::detail {

PrimeField::PrimeField(u64 prime) : p_(prime) {
  u64 inv = prime;  // Newton iteration for prime^{-1} mod 2^64
  for (int i = 0; i < 6; ++i) inv *= 2 - prime * inv;
  neg_inv_ = ~inv + 1;
  const unsigned __int128 r = (static_cast<unsigned __int128>(1) << 64) % prime;
  r2_ = static_cast<u64>((r * r) % prime);
}

u64 PrimeField::pow(u64 a, u64 e) const {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  PrimeField F(n);
  // Deterministic Miller-Rabin witness set for 64-bit integers.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = F.pow(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = F.mul(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 nth_solver_prime(std::size_t k) {
  static std::vector<u64> cache;
  // Callers are single-threaded solvers; the cache is filled in order.
  u64 candidate = cache.empty() ? (1ULL << 62) - 1 : cache.back() - 2;
  while (cache.size() <= k) {
    while (!is_prime(candidate)) candidate -= 2;
    cache.push_back(candidate);
    candidate -= 2;
  }
  return cache[k];
}

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

ModPoly mul(const PrimeField& F, const ModPoly& a, const ModPoly& b) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

ModPoly sub(const PrimeField& F, const ModPoly& a, const ModPoly& b) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

std::pair<ModPoly, ModPoly> divmod(const PrimeField& F, const ModPoly& a, const ModPoly& b) {
  ModPoly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  ModPoly q(r.size() - b.size() + 1, 0);
  const u64 inv = F.inv(b.back());
  for (std::size_t i = r.size(); i-- >= b.size();) {
    const u64 f = F.mul(r[i], inv);
    const std::size_t shift = i - (b.size() - 1);
    q[shift] = f;
    if (f != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = F.sub(r[shift + j], F.mul(f, b[j]));
    if (i == 0) break;
  }
  trim(q);
  trim(r);
  return {q, r};
}

u64 eval(const PrimeField& F, const ModPoly& a, u64 x) {
  u64 acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a[i]);
  return acc;
}

ModPoly taylor_shift(const PrimeField& F, const ModPoly& a, u64 shift) {
  // Horner in the polynomial (x + shift).
  ModPoly acc;
  for (std::size_t i = a.size(); i-- > 0;) {
    ModPoly next(acc.size() + 1, 0);
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] = F.add(next[j + 1], acc[j]);
      next[j] = F.add(next[j], F.mul(acc[j], shift));
    }
    next[0] = F.add(next[0], a[i]);
    acc = std::move(next);
  }
  trim(acc);
  return acc;
}

Interpolator::Interpolator(const PrimeField& F, std::vector<u64> nodes) : field_(&F), nodes_(std::move(nodes)) {
  const std::size_t m = nodes_.size();
  inv_diff_.assign(m, {});
  for (std::size_t j = 1; j < m; ++j) {
    inv_diff_[j].assign(m, 0);
    for (std::size_t i = j; i < m; ++i) inv_diff_[j][i] = F.inv(F.sub(nodes_[i], nodes_[i - j]));
  }
}

ModPoly Interpolator::operator()(const std::vector<u64>& values) const {
  const PrimeField& F = *field_;
  const std::size_t m = nodes_.size();
  std::vector<u64> coef(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(m));
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = m - 1; i >= j; --i) {
      coef[i] = F.mul(F.sub(coef[i], coef[i - 1]), inv_diff_[j][i]);
      if (i == j) break;
    }
  ModPoly result;
  result.reserve(m);
  for (std::size_t i = m; i-- > 0;) {
    // result = result * (x - nodes[i]) + coef[i]
    result.insert(result.begin(), 0);
    for (std::size_t j = 0; j + 1 < result.size(); ++j) result[j] = F.sub(result[j], F.mul(result[j + 1], nodes_[i]));
    result[0] = F.add(result[0], coef[i]);
  }
  trim(result);
  return result;
}

ModPoly Interpolator::node_polynomial() const {
  ModPoly acc{1};
  for (u64 x : nodes_) acc = mul(*field_, acc, ModPoly{field_->neg(x), 1});
  return acc;
}

std::optional<std::pair<ModPoly, ModPoly>> rational_reconstruct(const PrimeField& F, const ModPoly& m,
                                                                const ModPoly& f, int num_bound) {
  ModPoly r0 = m;
  ModPoly r1 = divmod(F, f, m).second;
  ModPoly t0;
  ModPoly t1{1};
  while (degree(r1) >= num_bound) {
    auto [q, r] = divmod(F, r0, r1);
    ModPoly t2 = sub(F, t0, mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1.empty()) return std::nullopt;
  return std::make_pair(r1, t1);
}

bool SparseLU::factor(const PrimeField& F, const std::vector<SparseRow>& rows) {
  field_ = &F;
  n_ = rows.size();
  ops_.clear();
  pivots_.clear();
  const std::size_t n = n_;
  std::vector<u64> a(n * n, 0);
  std::vector<std::uint32_t> row_nnz(n, 0), col_nnz(n, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& [c, v] : rows[r]) {
      if (v == 0) continue;
      u64& cell = a[r * n + c];
      if (cell == 0) {
        ++row_nnz[r];
        ++col_nnz[c];
      }
      cell = F.add(cell, v);
      if (cell == 0) {
        --row_nnz[r];
        --col_nnz[c];
      }
    }
  std::vector<bool> row_alive(n, true), col_alive(n, true);
  std::vector<std::uint32_t> targets;
  SparseRow pivot_entries;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best_col = n;
    for (std::size_t c = 0; c < n; ++c)
      if (col_alive[c] && (best_col == n || col_nnz[c] < col_nnz[best_col])) best_col = c;
    if (col_nnz[best_col] == 0) return false;
    std::size_t best_row = n;
    targets.clear();
    for (std::size_t r = 0; r < n; ++r) {
      if (!row_alive[r] || a[r * n + best_col] == 0) continue;
      targets.push_back(static_cast<std::uint32_t>(r));
      if (best_row == n || row_nnz[r] < row_nnz[best_row]) best_row = r;
    }
    const std::size_t pr = best_row;
    const std::size_t pc = best_col;
    pivot_entries.clear();
    for (std::size_t c = 0; c < n; ++c)
      if (col_alive[c] && c != pc && a[pr * n + c] != 0)
        pivot_entries.emplace_back(static_cast<std::uint32_t>(c), a[pr * n + c]);
    const u64 inv = F.inv(a[pr * n + pc]);
    for (std::uint32_t r : targets) {
      if (r == pr) continue;
      const u64 f = F.mul(a[static_cast<std::size_t>(r) * n + pc], inv);
      a[static_cast<std::size_t>(r) * n + pc] = 0;
      --row_nnz[r];
      --col_nnz[pc];
      for (const auto& [c, v] : pivot_entries) {
        u64& cell = a[static_cast<std::size_t>(r) * n + c];
        const u64 before = cell;
        cell = F.sub(cell, F.mul(f, v));
        if (before == 0 && cell != 0) {
          ++row_nnz[r];
          ++col_nnz[c];
        } else if (before != 0 && cell == 0) {
          --row_nnz[r];
          --col_nnz[c];
        }
      }
      ops_.push_back({static_cast<std::uint32_t>(pr), r, f});
    }
    for (const auto& [c, v] : pivot_entries) --col_nnz[c];
    row_alive[pr] = false;
    col_alive[pc] = false;
    pivots_.push_back({static_cast<std::uint32_t>(pr), static_cast<std::uint32_t>(pc), inv, pivot_entries});
  }
  return true;
}

std::vector<u64> SparseLU::solve(std::vector<u64> rhs) const {
  const PrimeField& F = *field_;
  for (const auto& op : ops_) rhs[op.target_row] = F.sub(rhs[op.target_row], F.mul(op.factor, rhs[op.pivot_row]));
  std::vector<u64> x(n_, 0);
  for (std::size_t k = pivots_.size(); k-- > 0;) {
    const auto& piv = pivots_[k];
    u64 acc = rhs[piv.row];
    for (const auto& [c, v] : piv.entries) acc = F.sub(acc, F.mul(v, x[c]));
    x[piv.col] = F.mul(acc, piv.inv_pivot);
  }
  return x;
}

}  // namespace dasep::detail
