#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dasep/algebra/rational.hpp"

namespace dasep {

/// Integer partition stored as its positive parts in weakly decreasing order.
/// The ambient number of sites is a property of the chain, not the partition.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidParams unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// Parses "(2,1)" or "2,1".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  /// Number of positive parts, l(lambda).
  int length() const { return static_cast<int>(parts_.size()); }
  /// |lambda|
  int weight() const;
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  /// m_i(lambda), the number of parts equal to i.
  int multiplicity(int i) const;

  /// lambda with one part equal to i raised to i+1, if lambda has such a part.
  std::optional<Partition> raise_part(int i) const;
  /// lambda with one part equal to i lowered to i-1; lowering a 1 is not allowed.
  std::optional<Partition> lower_part(int i) const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// nu <._i lambda: lambda is nu with one part i turned into i+1.
bool covered_by(const Partition& nu, const Partition& lambda, int i);
/// lambda >._i nu: nu is lambda with one part i turned into i-1.
bool covers(const Partition& lambda, const Partition& nu, int i);

/// Fixed-length word over {0,...,9}; binary words and DASEP states are both Words.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {}

  static Word parse(std::string_view digits);

  const std::vector<std::uint8_t>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  std::uint8_t operator[](std::size_t i) const { return letters_[i]; }
  int count_nonzero() const;
  Word rotated_left(int shift) const;
  Word with_letter(std::size_t i, std::uint8_t letter) const;
  Word with_swap(std::size_t i, std::size_t j) const;

  std::string to_string() const;

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<std::uint8_t> letters_;
};

/// State (w, lambda) of the colored Boolean process.
struct CbpState {
  Word word;
  Partition shape;

  /// Rendered as "011:(2,1)".
  std::string to_string() const;
  static CbpState parse(std::string_view text);

  friend auto operator<=>(const CbpState&, const CbpState&) = default;
};

/// Partitions with every part in [1,p] and exactly q parts, in increasing
/// lexicographic order: (1,1) < (2,1) < (2,2).
std::vector<Partition> enumerate_chi(int p, int q);

/// All C(n,q) binary words with q ones, lexicographic with 0 < 1.
std::vector<Word> enumerate_words(int n, int q);

/// All C(n,q) p^q DASEP states, lexicographic with 0 < 1 < ... < p.
std::vector<Word> enumerate_gamma(int n, int p, int q);

/// mu -> (w, lambda): w marks the nonzero sites, lambda sorts the nonzero letters.
CbpState decompose(const Word& mu);

enum class ArrangementMode { all, aligned };

/// |S_n(lambda)| = multinomial(n; n-q, m_1, ..., m_p) in mode `all`,
/// |S_n^w(lambda)| = multinomial(q; m_1, ..., m_p) in mode `aligned`.
Integer count_arrangements(const Partition& lambda, int n, ArrangementMode mode);

Integer multinomial(const std::vector<int>& parts);
Integer binomial(int n, int k);

struct Rotation {
  Word word;
  int shift = 0;
};

/// Lexicographically least rotation and the smallest left shift reaching it.
Rotation canonical_rotation(const Word& mu);

/// Number of cyclic maximal runs of 1s; throws AllOnesOrAllZeros when w has no
/// 0 or no 1.
int block_count(const Word& w);

/// Partition 1^q.
Partition ones(int q);

}  // namespace dasep
