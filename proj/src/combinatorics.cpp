#include "dasep/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "dasep/error.hpp"

namespace dasep {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw Error(ErrorCode::InvalidParams, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw Error(ErrorCode::InvalidParams, "partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  int current = -1;
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      current = (current < 0 ? 0 : current * 10) + (c - '0');
    } else if (c == ',' || c == ')') {
      if (current >= 0) parts.push_back(current);
      current = -1;
    } else if (c != '(' && c != ' ') {
      throw Error(ErrorCode::ParseError, "bad partition '" + std::string(text) + "'");
    }
  }
  if (current >= 0) parts.push_back(current);
  // Zero padding as written in some tables, e.g. (2,1,0,0).
  std::erase(parts, 0);
  return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::optional<Partition> Partition::raise_part(int i) const {
  auto it = std::find(parts_.begin(), parts_.end(), i);
  if (it == parts_.end()) return std::nullopt;
  std::vector<int> next = parts_;
  next[static_cast<std::size_t>(it - parts_.begin())] = i + 1;
  return Partition(std::move(next));
}

std::optional<Partition> Partition::lower_part(int i) const {
  if (i < 2) return std::nullopt;
  auto it = std::find(parts_.rbegin(), parts_.rend(), i);
  if (it == parts_.rend()) return std::nullopt;
  std::vector<int> next = parts_;
  next[parts_.size() - 1 - static_cast<std::size_t>(it - parts_.rbegin())] = i - 1;
  return Partition(std::move(next));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

// Single-position difference check on zero-padded part lists.
bool differs_at_one_part(const Partition& from, const Partition& to, int from_value, int to_value) {
  const auto& a = from.parts();
  const auto& b = to.parts();
  std::size_t len = std::max(a.size(), b.size());
  int diffs = 0;
  bool matched = false;
  for (std::size_t j = 0; j < len; ++j) {
    int x = j < a.size() ? a[j] : 0;
    int y = j < b.size() ? b[j] : 0;
    if (x != y) {
      ++diffs;
      matched = (x == from_value && y == to_value);
    }
  }
  return diffs == 1 && matched;
}

}  // namespace

bool covered_by(const Partition& nu, const Partition& lambda, int i) {
  return differs_at_one_part(nu, lambda, i, i + 1);
}

bool covers(const Partition& lambda, const Partition& nu, int i) {
  return differs_at_one_part(lambda, nu, i, i - 1);
}

Word Word::parse(std::string_view digits) {
  std::vector<std::uint8_t> letters;
  for (char c : digits) {
    if (c < '0' || c > '9') throw Error(ErrorCode::ParseError, "bad word '" + std::string(digits) + "'");
    letters.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Word(std::move(letters));
}

int Word::count_nonzero() const {
  return static_cast<int>(std::count_if(letters_.begin(), letters_.end(), [](auto c) { return c != 0; }));
}

Word Word::rotated_left(int shift) const {
  std::vector<std::uint8_t> r = letters_;
  if (!r.empty()) {
    int n = length();
    std::rotate(r.begin(), r.begin() + ((shift % n) + n) % n, r.end());
  }
  return Word(std::move(r));
}

Word Word::with_letter(std::size_t i, std::uint8_t letter) const {
  std::vector<std::uint8_t> r = letters_;
  r[i] = letter;
  return Word(std::move(r));
}

Word Word::with_swap(std::size_t i, std::size_t j) const {
  std::vector<std::uint8_t> r = letters_;
  std::swap(r[i], r[j]);
  return Word(std::move(r));
}

std::string Word::to_string() const {
  std::string s;
  for (auto c : letters_) s += static_cast<char>('0' + c);
  return s;
}

std::string CbpState::to_string() const { return word.to_string() + ":" + shape.to_string(); }

CbpState CbpState::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorCode::ParseError, "bad CBP state '" + std::string(text) + "'");
  return {Word::parse(text.substr(0, colon)), Partition::parse(text.substr(colon + 1))};
}

std::vector<Partition> enumerate_chi(int p, int q) {
  if (p < 1 || q < 1) throw Error(ErrorCode::InvalidParams, "enumerate_chi needs p >= 1, q >= 1");
  std::vector<Partition> out;
  std::vector<int> parts(static_cast<std::size_t>(q));
  std::function<void(std::size_t, int)> fill = [&](std::size_t pos, int bound) {
    if (pos == parts.size()) {
      out.emplace_back(parts);
      return;
    }
    for (int v = 1; v <= bound; ++v) {
      parts[pos] = v;
      fill(pos + 1, v);
    }
  };
  fill(0, p);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_params(int n, int p, int q) {
  if (q < 1 || n <= q || p < 1 || p > 9)
    throw Error(ErrorCode::InvalidParams, "need n > q >= 1 and 1 <= p <= 9 (got n=" + std::to_string(n) +
                                              ", p=" + std::to_string(p) + ", q=" + std::to_string(q) + ")");
}

}  // namespace

std::vector<Word> enumerate_words(int n, int q) { return enumerate_gamma(n, 1, q); }

std::vector<Word> enumerate_gamma(int n, int p, int q) {
  check_params(n, p, q);
  std::vector<Word> out;
  std::vector<std::uint8_t> letters(static_cast<std::size_t>(n), 0);
  // Depth-first over positions with letters in increasing order yields
  // lexicographic output directly.
  std::function<void(int, int)> fill = [&](int pos, int remaining) {
    if (pos == n) {
      if (remaining == 0) out.emplace_back(letters);
      return;
    }
    if (n - pos > remaining) {
      letters[static_cast<std::size_t>(pos)] = 0;
      fill(pos + 1, remaining);
    }
    if (remaining > 0) {
      for (int v = 1; v <= p; ++v) {
        letters[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(v);
        fill(pos + 1, remaining - 1);
      }
    }
    letters[static_cast<std::size_t>(pos)] = 0;
  };
  fill(0, q);
  return out;
}

CbpState decompose(const Word& mu) {
  std::vector<std::uint8_t> w(mu.letters().size());
  std::vector<int> parts;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (mu[i] != 0) {
      w[i] = 1;
      parts.push_back(mu[i]);
    }
  }
  std::sort(parts.rbegin(), parts.rend());
  return {Word(std::move(w)), Partition(std::move(parts))};
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer multinomial(const std::vector<int>& parts) {
  Integer r = 1;
  int total = 0;
  for (int k : parts) {
    total += k;
    r *= binomial(total, k);
  }
  return r;
}

Integer count_arrangements(const Partition& lambda, int n, ArrangementMode mode) {
  const int q = lambda.length();
  if (q >= n) throw Error(ErrorCode::InvalidParams, "count_arrangements needs l(lambda) < n");
  std::vector<int> blocks;
  if (mode == ArrangementMode::all) blocks.push_back(n - q);
  for (int i = 1; i <= lambda.largest(); ++i) blocks.push_back(lambda.multiplicity(i));
  return multinomial(blocks);
}

Rotation canonical_rotation(const Word& mu) {
  Rotation best{mu, 0};
  for (int s = 1; s < mu.length(); ++s) {
    Word r = mu.rotated_left(s);
    if (r < best.word) best = {std::move(r), s};
  }
  return best;
}

int block_count(const Word& w) {
  const int n = w.length();
  int ones_count = 0;
  for (auto c : w.letters()) ones_count += (c != 0);
  if (ones_count == 0 || ones_count == n)
    throw Error(ErrorCode::AllOnesOrAllZeros, "block_count of '" + w.to_string() + "'");
  int blocks = 0;
  for (int i = 0; i < n; ++i)
    if (w[static_cast<std::size_t>(i)] == 0 && w[static_cast<std::size_t>((i + 1) % n)] != 0) ++blocks;
  return blocks;
}

Partition ones(int q) { return Partition(std::vector<int>(static_cast<std::size_t>(q), 1)); }

}  // namespace dasep
