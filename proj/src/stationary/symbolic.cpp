// Symbolic left kernel by evaluation and reconstruction.
//
// Modulo a prime, the kernel vector x(u, t) is recovered slice by slice:
// for a fixed t the bordered system H(u) c = e_last (last equation replaced by
// a random functional l) is expanded in a power series around a random u1,
// and a Pade approximant of a random combination of the series recovers the
// common denominator (l.x)(u). Slices are then glued in t by rational
// reconstruction of a random coefficient functional and interpolation.
// Residues from several primes are combined by CRT and rational
// reconstruction, and the candidate is accepted only after an exact symbolic
// balance check.

#include <map>
#include <random>
#include <string>

#include "dasep/error.hpp"
#include "dasep/stationary.hpp"
#include "stationary/modular.hpp"

namespace dasep {

namespace {

using detail::ModPoly;
using detail::PrimeField;
using detail::SparseLU;
using detail::SparseRow;
using detail::u64;

constexpr int kSeriesCheckTerms = 4;
constexpr std::size_t kSliceCheckCount = 3;
constexpr int kInitialSeriesTerms = 8;
constexpr std::size_t kInitialSlices = 8;
constexpr std::size_t kMaxPrimes = 48;
constexpr int kAttempts = 3;

/// One entry of the transposed generator, A[row][col] = rate(col -> row) or the
/// negated out-rate on the diagonal.
struct GeneratorEntry {
  std::uint32_t row, col;
  BivarPoly poly;
};

using ModVector = std::vector<std::map<Monomial, u64>>;

/// Sizes that sufficed for an earlier prime; later primes start there.
struct SizeHints {
  int series_terms = kInitialSeriesTerms;
  std::size_t slices = kInitialSlices;
};

struct PrimeOutcome {
  enum class Status { ok, singular, unusable } status = Status::unusable;
  ModVector coeffs;
  Monomial pivot;
};

u64 splitmix(u64 x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class PrimeSolver {
 public:
  PrimeSolver(const std::vector<GeneratorEntry>& entries, std::size_t n, u64 prime, std::uint64_t seed,
              std::uint32_t degree_cap, SizeHints& hints)
      : F_(prime), n_(n), seed_(seed), degree_cap_(degree_cap), rng_(seed ^ prime), hints_(hints) {
    for (const auto& e : entries) {
      ReducedEntry r{e.row, e.col, {}};
      for (const auto& [m, c] : e.poly.terms()) {
        const auto v = reduce(c);
        if (!v) {
          usable_ = false;
          return;
        }
        if (*v == 0) continue;
        r.terms.push_back({m.eu, m.et, *v});
        max_du_ = std::max(max_du_, m.eu);
        max_dt_ = std::max(max_dt_, m.et);
      }
      if (!r.terms.empty()) entries_.push_back(std::move(r));
    }
  }

  PrimeOutcome run() {
    PrimeOutcome out;
    if (!usable_) return out;
    u1_ = nonzero();
    ell_.resize(n_);
    lambda_.resize(n_);
    check_weights_.resize(n_);
    for (auto& v : ell_) v = nonzero();
    for (auto& v : lambda_) v = nonzero();
    for (auto& v : check_weights_) v = nonzero();

    std::vector<u64> ts;
    std::vector<std::vector<ModPoly>> slices;
    std::size_t failures = 0;
    std::size_t target = hints_.slices;
    for (;;) {
      while (slices.size() < target + kSliceCheckCount) {
        const u64 tj = nonzero();
        if (std::find(ts.begin(), ts.end(), tj) != ts.end()) continue;
        auto w = slice(tj);
        if (!w) {
          // A singular slice is either an unlucky point or a kernel of
          // dimension > 1; repeated failures before any success mean the latter.
          if (++failures > 3 && slices.empty()) {
            out.status = PrimeOutcome::Status::singular;
            return out;
          }
          if (failures > 3 + slices.size()) return out;
          continue;
        }
        ts.push_back(tj);
        slices.push_back(std::move(*w));
      }
      if (auto coeffs = glue(ts, slices, target)) {
        out.coeffs = std::move(*coeffs);
        break;
      }
      target += 8;
      if (target / 2 > 2 * static_cast<std::size_t>(degree_cap_) + 2)
        throw Error(ErrorCode::DegreeCapExceeded, "t-degree of the stationary vector exceeds the cap");
    }

    std::uint32_t du = 0, dt = 0;
    for (const auto& entry : out.coeffs)
      for (const auto& [m, c] : entry) {
        du = std::max(du, m.eu);
        dt = std::max(dt, m.et);
      }
    hints_.series_terms = std::max(kInitialSeriesTerms, 2 * static_cast<int>(du) + 2);
    hints_.slices = std::max(kInitialSlices, 2 * static_cast<std::size_t>(dt) + 2);

    const auto& first = out.coeffs.front();
    if (first.empty()) return out;
    out.pivot = first.rbegin()->first;
    const u64 inv = F_.inv(first.rbegin()->second);
    for (auto& entry : out.coeffs)
      for (auto& [m, c] : entry) c = F_.mul(c, inv);
    out.status = PrimeOutcome::Status::ok;
    return out;
  }

 private:
  struct ReducedTerm {
    std::uint32_t eu, et;
    u64 coeff;
  };
  struct ReducedEntry {
    std::uint32_t row, col;
    std::vector<ReducedTerm> terms;
  };

  std::optional<u64> reduce(const Rational& c) const {
    const u64 p = F_.prime();
    const u64 den = mpz_fdiv_ui(c.denominator().get_mpz_t(), p);
    if (den == 0) return std::nullopt;
    const u64 num = mpz_fdiv_ui(c.numerator().get_mpz_t(), p);
    return F_.mul(num, F_.inv(den));
  }

  u64 nonzero() { return rng_() % (F_.prime() - 1) + 1; }

  /// Random weight attached to coefficient slot (state, u-degree).
  u64 slot_weight(std::size_t state, std::size_t degree) const {
    return splitmix(seed_ ^ splitmix(state * 0x100000001b3ULL + degree)) % (F_.prime() - 1) + 1;
  }

  /// x(u, t_j) / (l.x)(u1, t_j) as polynomials in u, or nullopt when the
  /// bordered matrix is singular at this slice.
  std::optional<std::vector<ModPoly>> slice(u64 tj) {
    const std::size_t D = max_du_;
    std::vector<std::vector<u64>> binom(D + 1, std::vector<u64>(D + 1, 0));
    for (std::size_t a = 0; a <= D; ++a) {
      binom[a][0] = 1;
      for (std::size_t b = 1; b <= a; ++b) binom[a][b] = F_.add(binom[a - 1][b - 1], b < a ? binom[a - 1][b] : 0);
    }
    std::vector<u64> u1pow(D + 1, 1), tpow(max_dt_ + 1, 1);
    for (std::size_t a = 1; a <= D; ++a) u1pow[a] = F_.mul(u1pow[a - 1], u1_);
    for (std::size_t b = 1; b <= max_dt_; ++b) tpow[b] = F_.mul(tpow[b - 1], tj);

    // H[d] is the coefficient of s^d in the bordered matrix at u = u1 + s.
    std::vector<std::vector<SparseRow>> H(D + 1, std::vector<SparseRow>(n_));
    std::vector<u64> vals(D + 1);
    for (const auto& e : entries_) {
      std::fill(vals.begin(), vals.end(), 0);
      for (const auto& term : e.terms) {
        const u64 base = F_.mul(term.coeff, tpow[term.et]);
        for (std::size_t d = 0; d <= term.eu; ++d)
          vals[d] = F_.add(vals[d], F_.mul(base, F_.mul(binom[term.eu][d], u1pow[term.eu - d])));
      }
      for (std::size_t d = 0; d <= D; ++d)
        if (vals[d] != 0) H[d][e.row].emplace_back(e.col, vals[d]);
    }
    for (std::uint32_t c = 0; c < n_; ++c) H[0][n_ - 1].emplace_back(c, ell_[c]);

    SparseLU lu;
    if (!lu.factor(F_, H[0])) return std::nullopt;

    std::vector<std::vector<u64>> series;
    auto extend = [&](std::size_t terms) {
      while (series.size() < terms) {
        const std::size_t a = series.size();
        std::vector<u64> rhs(n_, 0);
        if (a == 0) rhs[n_ - 1] = 1;
        for (std::size_t d = 1; d <= std::min(a, D); ++d)
          for (std::size_t k = 0; k + 1 < n_; ++k)
            for (const auto& [col, v] : H[d][k]) rhs[k] = F_.sub(rhs[k], F_.mul(v, series[a - d][col]));
        series.push_back(lu.solve(std::move(rhs)));
      }
    };

    for (int M = hints_.series_terms;; M += 8) {
      const int bound = M / 2;
      if (bound > static_cast<int>(degree_cap_) + 1)
        throw Error(ErrorCode::DegreeCapExceeded, "u-degree of the stationary vector exceeds the cap");
      const std::size_t total = static_cast<std::size_t>(M + kSeriesCheckTerms);
      extend(total);
      ModPoly z(static_cast<std::size_t>(M), 0);
      for (int a = 0; a < M; ++a)
        for (std::size_t i = 0; i < n_; ++i) z[a] = F_.add(z[a], F_.mul(lambda_[i], series[a][i]));
      detail::trim(z);
      ModPoly modulus(static_cast<std::size_t>(M) + 1, 0);
      modulus.back() = 1;
      auto rr = detail::rational_reconstruct(F_, modulus, z, bound);
      if (!rr) continue;
      ModPoly den = rr->second;
      if (den.empty() || den[0] == 0 || detail::degree(den) > M - bound) continue;
      const u64 inv0 = F_.inv(den[0]);
      for (auto& c : den) c = F_.mul(c, inv0);

      // Two random combinations times the denominator must truncate to
      // degree < bound, including on the extra series terms; componentwise
      // failures would show up in them with overwhelming probability.
      auto truncates = [&](const std::vector<u64>& weights) {
        std::vector<u64> combo(total, 0);
        for (std::size_t a = 0; a < total; ++a)
          for (std::size_t i = 0; i < n_; ++i) combo[a] = F_.add(combo[a], F_.mul(weights[i], series[a][i]));
        for (std::size_t a = static_cast<std::size_t>(bound); a < total; ++a) {
          u64 acc = 0;
          for (std::size_t b = 0; b < den.size() && b <= a; ++b) acc = F_.add(acc, F_.mul(den[b], combo[a - b]));
          if (acc != 0) return false;
        }
        return true;
      };
      const bool ok = truncates(lambda_) && truncates(check_weights_);
      std::vector<ModPoly> out(n_);
      for (std::size_t i = 0; i < n_ && ok; ++i) {
        ModPoly x(static_cast<std::size_t>(bound), 0);
        for (std::size_t a = 0; a < x.size(); ++a) {
          u64 acc = 0;
          for (std::size_t b = 0; b < den.size() && b <= a; ++b) acc = F_.add(acc, F_.mul(den[b], series[a - b][i]));
          x[a] = acc;
        }
        detail::trim(x);
        out[i] = detail::taylor_shift(F_, x, F_.neg(u1_));
      }
      if (!ok) continue;
      return out;
    }
  }

  /// Combines slices into bivariate coefficients, or nullopt when more slices
  /// are needed. The first `used` slices fit, the remaining ones check.
  std::optional<ModVector> glue(const std::vector<u64>& ts, const std::vector<std::vector<ModPoly>>& slices,
                                std::size_t used) {
    const std::size_t total = slices.size();
    std::size_t width = 0;
    for (const auto& s : slices)
      for (const auto& p : s) width = std::max(width, p.size());

    auto coeff = [&](std::size_t j, std::size_t i, std::size_t a) -> u64 {
      return a < slices[j][i].size() ? slices[j][i][a] : 0;
    };

    std::vector<u64> psi(total, 0);
    for (std::size_t j = 0; j < total; ++j)
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t a = 0; a < slices[j][i].size(); ++a)
          psi[j] = F_.add(psi[j], F_.mul(slot_weight(i, a), slices[j][i][a]));

    detail::Interpolator interp(F_, std::vector<u64>(ts.begin(), ts.begin() + static_cast<std::ptrdiff_t>(used)));
    const ModPoly fitted = interp(psi);
    const auto rr = detail::rational_reconstruct(F_, interp.node_polynomial(), fitted, static_cast<int>(used / 2));
    if (!rr) return std::nullopt;
    ModPoly den = rr->second;
    const ModPoly& num = rr->first;
    if (den.empty() || detail::degree(den) > static_cast<int>(used - used / 2)) return std::nullopt;
    const u64 lead_inv = F_.inv(den.back());
    for (auto& c : den) c = F_.mul(c, lead_inv);
    std::vector<u64> den_at(total);
    for (std::size_t j = 0; j < total; ++j) {
      den_at[j] = detail::eval(F_, den, ts[j]);
      if (den_at[j] == 0) return std::nullopt;
    }
    const u64 num_scale = lead_inv;
    for (std::size_t j = used; j < total; ++j)
      if (F_.mul(den_at[j], psi[j]) != F_.mul(num_scale, detail::eval(F_, num, ts[j]))) return std::nullopt;

    ModVector result(n_);
    std::vector<u64> values(total);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t a = 0; a < width; ++a) {
        bool any = false;
        for (std::size_t j = 0; j < total; ++j) {
          values[j] = F_.mul(den_at[j], coeff(j, i, a));
          any = any || values[j] != 0;
        }
        if (!any) continue;
        const ModPoly in_t = interp(values);
        for (std::size_t j = used; j < total; ++j)
          if (detail::eval(F_, in_t, ts[j]) != values[j]) return std::nullopt;
        for (std::size_t b = 0; b < in_t.size(); ++b)
          if (in_t[b] != 0)
            result[i][Monomial{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)}] = in_t[b];
      }
    return result;
  }

  PrimeField F_;
  std::size_t n_;
  std::uint64_t seed_;
  std::uint32_t degree_cap_;
  std::mt19937_64 rng_;
  bool usable_ = true;
  std::vector<ReducedEntry> entries_;
  std::uint32_t max_du_ = 0;
  std::uint32_t max_dt_ = 0;
  u64 u1_ = 0;
  std::vector<u64> ell_, lambda_, check_weights_;
  SizeHints& hints_;
};

/// Rational number r/s congruent to a modulo m with |r|, s <= sqrt(m/2).
std::optional<Rational> wang_reconstruct(const Integer& a, const Integer& m) {
  Integer bound;
  Integer half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Integer r0 = m, r1 = a, s0 = 0, s1 = 1, q, tmp;
  while (r1 > bound) {
    q = r0 / r1;
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  if (abs(s1) > bound || s1 == 0) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
  if (g != 1) return std::nullopt;
  return Rational(r1, s1);
}

std::vector<GeneratorEntry> transposed_generator(const TransitionSystem& sys) {
  const std::size_t n = sys.size();
  std::vector<GeneratorEntry> entries;
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [k, rate] : sys.row(j))
      if (k != n - 1) entries.push_back({static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(j), rate});
    if (j != n - 1)
      entries.push_back({static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(j), -sys.out_rate(j)});
  }
  return entries;
}

/// Residual x^T (scaled_P - scale I) at one random point modulo `prime`.
bool residual_vanishes_mod(const TransitionSystem& sys, const std::vector<BivarPoly>& x, u64 prime, u64 seed) {
  const PrimeField F(prime);
  auto reduce = [&](const Rational& c) -> std::optional<u64> {
    const u64 den = mpz_fdiv_ui(c.denominator().get_mpz_t(), prime);
    if (den == 0) return std::nullopt;
    return F.mul(mpz_fdiv_ui(c.numerator().get_mpz_t(), prime), F.inv(den));
  };
  const u64 u0 = splitmix(seed) % prime;
  const u64 t0 = splitmix(seed ^ 0x5bd1e995ULL) % prime;
  auto eval = [&](const BivarPoly& poly) -> std::optional<u64> {
    u64 acc = 0;
    for (const auto& [m, c] : poly.terms()) {
      const auto r = reduce(c);
      if (!r) return std::nullopt;
      acc = F.add(acc, F.mul(*r, F.mul(F.pow(u0, m.eu), F.pow(t0, m.et))));
    }
    return acc;
  };
  const std::size_t n = sys.size();
  std::vector<u64> values(n), residual(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const auto v = eval(x[j]);
    if (!v) return true;  // cannot screen at this prime; defer to the exact check
    values[j] = *v;
  }
  for (std::size_t j = 0; j < n; ++j) {
    u64 out = 0;
    for (const auto& [k, rate] : sys.row(j)) {
      const auto r = eval(rate);
      if (!r) return true;
      residual[k] = F.add(residual[k], F.mul(values[j], *r));
      out = F.add(out, *r);
    }
    residual[j] = F.sub(residual[j], F.mul(values[j], out));
  }
  for (u64 r : residual)
    if (r != 0) return false;
  return true;
}

}  // namespace

StationaryVector solve_stationary_symbolic(const TransitionSystem& sys, const SolverOptions& options) {
  const std::size_t n = sys.size();
  if (n > options.state_cap)
    throw Error(ErrorCode::StateCapExceeded,
                std::to_string(n) + " states exceed the cap of " + std::to_string(options.state_cap));
  if (!check_irreducible(sys))
    throw Error(ErrorCode::KernelDimensionNotOne, "chain is not irreducible");
  if (n == 1)
    return StationaryVector::symbolic(sys.states(), {BivarPoly(1)}, Normalization::gcd_one);

  const auto entries = transposed_generator(sys);
  using Key = std::pair<std::size_t, Monomial>;

  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const std::uint64_t seed = splitmix(options.seed + static_cast<std::uint64_t>(attempt));
    std::map<Key, Integer> residues;
    Integer modulus = 1;
    std::optional<Monomial> pivot;
    std::size_t singular = 0;
    SizeHints hints;

    for (std::size_t k = 0; k < kMaxPrimes; ++k) {
      const u64 prime = detail::nth_solver_prime(k);
      PrimeOutcome outcome = PrimeSolver(entries, n, prime, seed, options.degree_cap, hints).run();
      if (outcome.status == PrimeOutcome::Status::singular) {
        if (++singular >= 2) throw Error(ErrorCode::KernelDimensionNotOne, "transposed generator has nullity > 1");
        continue;
      }
      if (outcome.status != PrimeOutcome::Status::ok) continue;
      if (pivot && outcome.pivot != *pivot) continue;
      pivot = outcome.pivot;

      // CRT: x = old + M * ((r - old) / M mod p).
      const Integer p_int = Integer(std::to_string(prime));
      Integer m_mod_p;
      mpz_mod(m_mod_p.get_mpz_t(), modulus.get_mpz_t(), p_int.get_mpz_t());
      Integer m_inv;
      mpz_invert(m_inv.get_mpz_t(), m_mod_p.get_mpz_t(), p_int.get_mpz_t());
      for (std::size_t i = 0; i < n; ++i)
        for (const auto& [m, c] : outcome.coeffs[i]) residues.try_emplace(Key{i, m}, 0);
      for (auto& [key, old] : residues) {
        const auto& entry = outcome.coeffs[key.first];
        const auto it = entry.find(key.second);
        const Integer r = it == entry.end() ? Integer(0) : Integer(std::to_string(it->second));
        Integer delta = r - old;
        delta = delta * m_inv;
        mpz_mod(delta.get_mpz_t(), delta.get_mpz_t(), p_int.get_mpz_t());
        old += modulus * delta;
      }
      modulus *= p_int;

      // Values share a small denominator after pivot normalization. Once it is
      // known, D * value is an integer needing half the modulus bits that
      // general rational reconstruction would; the 2^32 margin guards the
      // early acceptance.
      std::vector<BivarPoly> polys(n);
      bool complete = true;
      Integer common_den = 1;
      const Integer margin_bound = modulus >> 32;
      Integer y;
      for (const auto& [key, value] : residues) {
        if (value == 0) continue;
        y = common_den * value;
        mpz_mod(y.get_mpz_t(), y.get_mpz_t(), modulus.get_mpz_t());
        if (y > modulus / 2) y -= modulus;
        if (abs(y) < margin_bound) {
          polys[key.first].add_term(key.second, Rational(y, common_den));
          continue;
        }
        const auto q = wang_reconstruct(value, modulus);
        if (!q) {
          complete = false;
          break;
        }
        mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), q->denominator().get_mpz_t());
        polys[key.first].add_term(key.second, *q);
      }
      if (!complete) continue;
      const Rational clear(denominator_lcm(polys));
      for (auto& p : polys) p *= clear;
      // A random evaluation modulo an unused prime screens out wrong
      // reconstructions before the exact check.
      if (!residual_vanishes_mod(sys, polys, detail::nth_solver_prime(kMaxPrimes + static_cast<std::size_t>(attempt)),
                                 splitmix(seed + k)))
        continue;
      auto candidate = StationaryVector::symbolic(sys.states(), std::move(polys));
      if (!verify_balance(sys, candidate).pass) continue;

      auto normalized = normalize_gcd_one(std::move(candidate));
      for (const auto& p : normalized.polys)
        if (p.total_degree() > options.degree_cap)
          throw Error(ErrorCode::DegreeCapExceeded, "stationary entry of total degree " +
                                                       std::to_string(p.total_degree()) + " exceeds the cap");
      return normalized;
    }
  }
  throw Error(ErrorCode::ReconstructionFailed, "modular reconstruction did not converge");
}

}  // namespace dasep
