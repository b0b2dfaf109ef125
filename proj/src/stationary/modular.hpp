#pragma once

// Arithmetic modulo a word-size prime, sparse LU, and univariate
// interpolation / rational reconstruction. Used by the symbolic solver.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace dasep::detail {

using u64 = std::uint64_t;

class PrimeField {
 public:
  /// prime must be odd and below 2^62.
  explicit PrimeField(u64 prime);

  u64 prime() const { return p_; }
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
  /// Two Montgomery reductions: redc(redc(a*b) * R^2) = a*b mod p, which
  /// avoids a 128-bit division.
  u64 mul(u64 a, u64 b) const { return redc(static_cast<unsigned __int128>(redc(static_cast<unsigned __int128>(a) * b)) * r2_); }
  u64 pow(u64 a, u64 e) const;
  u64 inv(u64 a) const { return pow(a, p_ - 2); }

 private:
  u64 redc(unsigned __int128 x) const {
    const u64 m = static_cast<u64>(x) * neg_inv_;
    const u64 r = static_cast<u64>((x + static_cast<unsigned __int128>(m) * p_) >> 64);
    return r >= p_ ? r - p_ : r;
  }

  u64 p_;
  u64 neg_inv_ = 0;  // -p^{-1} mod 2^64
  u64 r2_ = 0;       // 2^128 mod p
};

bool is_prime(u64 n);
/// The k-th largest prime below 2^62 (k = 0, 1, ...).
u64 nth_solver_prime(std::size_t k);

/// Univariate polynomial over the field, low degree first, no trailing zeros.
using ModPoly = std::vector<u64>;

void trim(ModPoly& a);
int degree(const ModPoly& a);
ModPoly mul(const PrimeField& F, const ModPoly& a, const ModPoly& b);
ModPoly sub(const PrimeField& F, const ModPoly& a, const ModPoly& b);
std::pair<ModPoly, ModPoly> divmod(const PrimeField& F, const ModPoly& a, const ModPoly& b);
u64 eval(const PrimeField& F, const ModPoly& a, u64 x);
/// a(x + shift)
ModPoly taylor_shift(const PrimeField& F, const ModPoly& a, u64 shift);
/// Interpolation through fixed, distinct nodes; the inverse node differences
/// are computed once and reused for every value vector.
class Interpolator {
 public:
  Interpolator(const PrimeField& F, std::vector<u64> nodes);
  /// Polynomial of degree < nodes.size() through (nodes[i], values[i]).
  ModPoly operator()(const std::vector<u64>& values) const;
  /// prod (x - nodes[i])
  ModPoly node_polynomial() const;

 private:
  const PrimeField* field_;
  std::vector<u64> nodes_;
  std::vector<std::vector<u64>> inv_diff_;  // inv_diff_[j][i] = 1 / (nodes[i] - nodes[i - j])
};

/// Extended-Euclid rational reconstruction: (num, den) with den*f = num mod m,
/// deg num < num_bound. Returns nullopt when the remainder sequence does not
/// get there.
std::optional<std::pair<ModPoly, ModPoly>> rational_reconstruct(const PrimeField& F, const ModPoly& m,
                                                                const ModPoly& f, int num_bound);

/// Sparse matrix row: (column, value) pairs.
using SparseRow = std::vector<std::pair<std::uint32_t, u64>>;

/// LU factorization of a square matrix over the field with minimum-degree
/// style pivoting (fewest nonzeros in the column, then in the row).
class SparseLU {
 public:
  /// Returns false when the matrix is singular.
  bool factor(const PrimeField& F, const std::vector<SparseRow>& rows);
  std::vector<u64> solve(std::vector<u64> rhs) const;

 private:
  struct EliminationOp {
    std::uint32_t pivot_row, target_row;
    u64 factor;
  };
  struct PivotRow {
    std::uint32_t row, col;
    u64 inv_pivot;
    SparseRow entries;  // excluding the pivot column
  };
  const PrimeField* field_ = nullptr;
  std::size_t n_ = 0;
  std::vector<EliminationOp> ops_;
  std::vector<PivotRow> pivots_;
};

}  // namespace dasep::detail
