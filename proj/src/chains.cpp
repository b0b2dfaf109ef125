#include "dasep/chains.hpp"

#include <algorithm>
#include "json.hpp"

#include "dasep/combinatorics.hpp"
#include "dasep/error.hpp"

namespace dasep {

std::string to_string(ChainKind kind) {
  switch (kind) {
    case ChainKind::dasep: return "dasep";
    case ChainKind::cbp: return "cbp";
    case ChainKind::rrg: return "rrg";
  }
  return "?";
}

ChainKind parse_chain_kind(std::string_view name) {
  if (name == "dasep") return ChainKind::dasep;
  if (name == "cbp") return ChainKind::cbp;
  if (name == "rrg") return ChainKind::rrg;
  throw Error(ErrorCode::ParseError, "unknown chain '" + std::string(name) + "'");
}

TransitionSystem::TransitionSystem(ChainKind kind, ChainParams params, int scale, std::vector<std::string> states)
    : kind_(kind), params_(params), scale_(scale), states_(std::move(states)), rows_(states_.size()) {
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (!index_.emplace(states_[i], i).second)
      throw Error(ErrorCode::InvalidParams, "duplicate state '" + states_[i] + "'");
  }
}

std::optional<std::size_t> TransitionSystem::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

BivarPoly TransitionSystem::rate(std::size_t from, std::size_t to) const {
  auto it = rows_[from].find(to);
  return it == rows_[from].end() ? BivarPoly() : it->second;
}

BivarPoly TransitionSystem::out_rate(std::size_t from) const {
  BivarPoly s;
  for (const auto& [to, r] : rows_[from]) s += r;
  return s;
}

BivarPoly TransitionSystem::diagonal(std::size_t from) const { return BivarPoly(scale_) - out_rate(from); }

std::size_t TransitionSystem::edge_count() const {
  std::size_t c = 0;
  for (const auto& r : rows_) c += r.size();
  return c;
}

void TransitionSystem::add_rate(std::size_t from, std::size_t to, const BivarPoly& scaled_rate) {
  if (from >= size() || to >= size()) throw Error(ErrorCode::IndexMismatch, "state index out of range");
  if (from == to) throw Error(ErrorCode::InvalidParams, "self-loops are implicit");
  if (scaled_rate.is_zero()) return;
  auto [it, inserted] = rows_[from].try_emplace(to, scaled_rate);
  if (!inserted) {
    merged_moves_ = true;
    it->second += scaled_rate;
    if (it->second.is_zero()) rows_[from].erase(it);
  }
}

namespace {

void check_params(int n, int p, int q) {
  if (q < 1 || n <= q || p < 1 || p > 9)
    throw Error(ErrorCode::InvalidParams, "need n > q >= 1 and 1 <= p <= 9 (got n=" + std::to_string(n) +
                                              ", p=" + std::to_string(p) + ", q=" + std::to_string(q) + ")");
}

template <class T>
std::vector<std::string> labels(const std::vector<T>& items) {
  std::vector<std::string> out;
  out.reserve(items.size());
  for (const auto& x : items) out.push_back(x.to_string());
  return out;
}

}  // namespace

TransitionSystem build_dasep(int n, int p, int q) {
  check_params(n, p, q);
  const auto states = enumerate_gamma(n, p, q);
  TransitionSystem sys(ChainKind::dasep, {n, p, q}, 3 * n, labels(states));
  const BivarPoly one(1);
  const BivarPoly t = BivarPoly::t();
  const BivarPoly u = BivarPoly::u();
  auto index = [&](const Word& w) {
    return static_cast<std::size_t>(std::lower_bound(states.begin(), states.end(), w) - states.begin());
  };
  const auto last = static_cast<std::size_t>(n - 1);
  for (std::size_t x = 0; x < states.size(); ++x) {
    const Word& mu = states[x];
    // (i, j) -> (j, i) at positions (k, k+1): t if i > j, 1 if j > i.
    for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(n); ++k) {
      auto i = mu[k];
      auto j = mu[k + 1];
      if (i != j) sys.add_rate(x, index(mu.with_swap(k, k + 1)), i > j ? t : one);
    }
    // (i, ..., j) -> (j, ..., i): t if j > i, 1 if i > j.
    {
      auto i = mu[0];
      auto j = mu[last];
      if (i != j) sys.add_rate(x, index(mu.with_swap(0, last)), j > i ? t : one);
    }
    // Species moves keep the particle count: only letters >= 1 change.
    for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
      auto i = mu[k];
      if (i >= 1 && i <= p - 1) sys.add_rate(x, index(mu.with_letter(k, static_cast<std::uint8_t>(i + 1))), u);
      if (i >= 2) sys.add_rate(x, index(mu.with_letter(k, static_cast<std::uint8_t>(i - 1))), one);
    }
  }
  return sys;
}

TransitionSystem build_cbp(int n, int p, int q) {
  check_params(n, p, q);
  const auto words = enumerate_words(n, q);
  const auto shapes = enumerate_chi(p, q);
  std::vector<CbpState> states;
  for (const auto& w : words)
    for (const auto& s : shapes) states.push_back({w, s});
  TransitionSystem sys(ChainKind::cbp, {n, p, q}, 3 * n, labels(states));
  const BivarPoly u = BivarPoly::u();
  const BivarPoly t = BivarPoly::t();
  auto index = [&](const CbpState& s) {
    return static_cast<std::size_t>(std::lower_bound(states.begin(), states.end(), s) - states.begin());
  };
  for (std::size_t x = 0; x < states.size(); ++x) {
    const auto& [w, shape] = states[x];
    for (int i = 1; i <= p; ++i) {
      const int m = shape.multiplicity(i);
      if (m == 0) continue;
      if (i <= p - 1) sys.add_rate(x, index({w, *shape.raise_part(i)}), u * Rational(m));
      if (i >= 2) sys.add_rate(x, index({w, *shape.lower_part(i)}), BivarPoly(m));
    }
    for (int k = 0; k < n; ++k) {
      const auto a = static_cast<std::size_t>(k);
      const auto b = static_cast<std::size_t>((k + 1) % n);
      if (w[a] == w[b]) continue;
      // 01 -> 10 at rate 1, 10 -> 01 at rate t, wrapping from site n to site 1.
      sys.add_rate(x, index({w.with_swap(a, b), shape}), w[a] == 0 ? BivarPoly(1) : t);
    }
  }
  return sys;
}

TransitionSystem build_rrg(int n, int p, int q) {
  check_params(n, p, q);
  const auto shapes = enumerate_chi(p, q);
  TransitionSystem sys(ChainKind::rrg, {n, p, q}, 3 * n, labels(shapes));
  const BivarPoly u = BivarPoly::u();
  auto index = [&](const Partition& s) {
    return static_cast<std::size_t>(std::lower_bound(shapes.begin(), shapes.end(), s) - shapes.begin());
  };
  for (std::size_t x = 0; x < shapes.size(); ++x) {
    const Partition& nu = shapes[x];
    for (int i = 1; i <= p; ++i) {
      const int m = nu.multiplicity(i);
      if (m == 0) continue;
      if (i <= p - 1) sys.add_rate(x, index(*nu.raise_part(i)), u * Rational(m));
      if (i >= 2) sys.add_rate(x, index(*nu.lower_part(i)), BivarPoly(m));
    }
  }
  return sys;
}

TransitionSystem build_chain(ChainKind kind, int n, int p, int q) {
  switch (kind) {
    case ChainKind::dasep: return build_dasep(n, p, q);
    case ChainKind::cbp: return build_cbp(n, p, q);
    case ChainKind::rrg: return build_rrg(n, p, q);
  }
  throw Error(ErrorCode::InvalidParams, "unknown chain kind");
}

StochasticReport check_stochastic(const TransitionSystem& sys, const Rational& u0, const Rational& t0) {
  if (u0 < Rational(0) || u0 > Rational(1) || t0 < Rational(0) || t0 > Rational(1))
    throw Error(ErrorCode::InvalidParams, "check_stochastic needs 0 <= u0, t0 <= 1");
  const Rational scale(sys.scale());
  StochasticReport report;
  report.min_diagonal = Rational(1);
  for (std::size_t x = 0; x < sys.size(); ++x) {
    Rational sum(0);
    for (const auto& [y, r] : sys.row(x)) {
      Rational v = r.eval(u0, t0) / scale;
      if (v < Rational(0) || v > Rational(1))
        throw Error(ErrorCode::NotStochastic, "row " + sys.state(x) + ": entry to " + sys.state(y) + " is " +
                                                  v.to_string());
      sum += v;
    }
    Rational diag = Rational(1) - sum;
    if (diag < Rational(0) || diag > Rational(1))
      throw Error(ErrorCode::NotStochastic, "row " + sys.state(x) + ": diagonal is " + diag.to_string());
    report.min_diagonal = std::min(report.min_diagonal, diag);
    ++report.rows_checked;
  }
  return report;
}

bool check_irreducible(const TransitionSystem& sys) {
  const std::size_t n = sys.size();
  if (n <= 1) return true;
  std::vector<std::vector<std::size_t>> forward(n), backward(n);
  for (std::size_t x = 0; x < n; ++x)
    for (const auto& [y, r] : sys.row(x)) {
      forward[x].push_back(y);
      backward[y].push_back(x);
    }
  auto reaches_all = [n](const std::vector<std::vector<std::size_t>>& adj) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : adj[x])
        if (!seen[y]) {
          seen[y] = true;
          ++count;
          stack.push_back(y);
        }
    }
    return count == n;
  };
  return reaches_all(forward) && reaches_all(backward);
}

std::string export_dot(const TransitionSystem& sys) {
  const auto& [n, p, q] = sys.params();
  std::string out = "digraph " + to_string(sys.kind()) + "_" + std::to_string(n) + "_" + std::to_string(p) + "_" +
                    std::to_string(q) + " {\n";
  for (const auto& s : sys.states()) out += "  \"" + s + "\";\n";
  const std::string denom = "/" + std::to_string(sys.scale());
  for (std::size_t x = 0; x < sys.size(); ++x) {
    for (const auto& [y, r] : sys.row(x)) {
      std::string label = r.is_monomial() ? r.to_string() + denom : "(" + r.to_string() + ")" + denom;
      out += "  \"" + sys.state(x) + "\" -> \"" + sys.state(y) + "\" [label=\"" + label + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

std::string export_matrix_json(const TransitionSystem& sys) {
  nlohmann::json j;
  j["kind"] = to_string(sys.kind());
  j["n"] = sys.params().n;
  j["p"] = sys.params().p;
  j["q"] = sys.params().q;
  j["scale"] = sys.scale();
  j["merged_moves"] = sys.has_merged_moves();
  j["states"] = sys.states();
  auto edges = nlohmann::json::array();
  for (std::size_t x = 0; x < sys.size(); ++x)
    for (const auto& [y, r] : sys.row(x))
      edges.push_back({{"from", sys.state(x)}, {"to", sys.state(y)}, {"rate", r.to_string()}, {"scale", sys.scale()}});
  j["edges"] = std::move(edges);
  return j.dump(2);
}

}  // namespace dasep
