// Brute-force reference implementations used as test oracles. Nothing here
// calls into the library's chain builders or solvers.
#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<mpq_class>>;

struct DenseChain {
  std::vector<std::string> states;  // lexicographic
  Matrix P;                         // row-stochastic at the chosen point
};

/// All words in {0..p}^n with exactly q nonzero letters, in lexicographic order.
inline std::vector<std::string> dasep_states(int n, int p, int q) {
  std::vector<std::string> out;
  std::string w(n, '0');
  const auto rec = [&](auto&& self, int pos, int used) -> void {
    if (pos == n) {
      if (used == q) out.push_back(w);
      return;
    }
    for (int c = 0; c <= p; ++c) {
      if (c > 0 && used == q) break;
      w[pos] = static_cast<char>('0' + c);
      self(self, pos + 1, used + (c > 0));
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// Transition matrix written straight from the hop/mutation rules, with every
/// rate divided by 3n.
inline DenseChain dasep_at(int n, int p, int q, const mpq_class& u, const mpq_class& t) {
  DenseChain c;
  c.states = dasep_states(n, p, q);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < c.states.size(); ++i) index[c.states[i]] = i;
  const std::size_t N = c.states.size();
  c.P.assign(N, std::vector<mpq_class>(N, 0));
  const mpq_class scale = 3 * n;
  for (std::size_t x = 0; x < N; ++x) {
    const std::string& mu = c.states[x];
    const auto add = [&](std::string nu, const mpq_class& rate) { c.P[x][index.at(nu)] += rate / scale; };
    for (int k = 0; k + 1 < n; ++k) {
      const char a = mu[k], b = mu[k + 1];
      if (a == b) continue;
      std::string nu = mu;
      std::swap(nu[k], nu[k + 1]);
      add(nu, a > b ? t : mpq_class(1));
    }
    if (n >= 2 && mu.front() != mu.back()) {
      std::string nu = mu;
      std::swap(nu.front(), nu.back());
      add(nu, mu.back() > mu.front() ? t : mpq_class(1));
    }
    for (int k = 0; k < n; ++k) {
      const int s = mu[k] - '0';
      if (s >= 1 && s < p) {
        std::string nu = mu;
        nu[k] = static_cast<char>(mu[k] + 1);
        add(nu, u);
      }
      if (s >= 2) {
        std::string nu = mu;
        nu[k] = static_cast<char>(mu[k] - 1);
        add(nu, 1);
      }
    }
    mpq_class out = 0;
    for (std::size_t y = 0; y < N; ++y) out += c.P[x][y];
    c.P[x][x] = 1 - out;
  }
  return c;
}

/// pi P = pi with sum(pi) = 1 by Gauss-Jordan on the transposed system.
inline std::vector<mpq_class> stationary(const Matrix& P) {
  const std::size_t N = P.size();
  Matrix A(N, std::vector<mpq_class>(N + 1, 0));
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < N; ++c) A[r][c] = P[c][r] - (r == c ? 1 : 0);
  }
  for (std::size_t c = 0; c < N; ++c) A[N - 1][c] = 1;
  A[N - 1][N] = 1;
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t piv = col;
    while (piv < N && A[piv][col] == 0) ++piv;
    if (piv == N) throw std::runtime_error("singular system");
    std::swap(A[piv], A[col]);
    const mpq_class inv = 1 / A[col][col];
    for (auto& v : A[col]) v *= inv;
    for (std::size_t r = 0; r < N; ++r) {
      if (r == col || A[r][col] == 0) continue;
      const mpq_class f = A[r][col];
      for (std::size_t k = col; k <= N; ++k) A[r][k] -= f * A[col][k];
    }
  }
  std::vector<mpq_class> pi(N);
  for (std::size_t r = 0; r < N; ++r) pi[r] = A[r][N];
  return pi;
}

}  // namespace oracle
