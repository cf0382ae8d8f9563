#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace escalier {

using Letter = std::uint32_t;

/// A non-commutative term: a finite sequence of 0-based variable indices
/// over an alphabet of `nvars` letters. The empty word is the term 1.
class Word {
 public:
  Word() = default;
  explicit Word(std::size_t nvars) : nvars_(nvars) {}
  Word(std::size_t nvars, std::vector<Letter> letters);
  Word(std::size_t nvars, std::initializer_list<Letter> letters)
      : Word(nvars, std::vector<Letter>(letters)) {}

  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  /// Letters [pos, pos+len).
  Word sub(std::size_t pos, std::size_t len) const;

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<Letter> letters_;
};

/// l * m * r. Throws MathError on alphabet mismatch.
Word concat(const Word& l, const Word& m, const Word& r);
Word operator*(const Word& a, const Word& b);

struct Occurrence {
  Word prefix;
  Word suffix;
  bool operator==(const Occurrence&) const = default;
};

/// All (prefix, suffix) with w = prefix * pattern * suffix, left to right.
std::vector<Occurrence> subword_occurrences(const Word& pattern, const Word& w);
/// Start positions of `pattern` in `w`, left to right.
std::vector<std::size_t> occurrence_positions(const Word& pattern, const Word& w);
bool is_factor(const Word& pattern, const Word& w);

/// w = X * rest
std::optional<std::pair<Letter, Word>> split_left(const Word& w);
/// w = rest * X
std::optional<std::pair<Word, Letter>> split_right(const Word& w);

/// Length-first, then leftmost-letter lexicographic order on words.
/// `precedence` lists letters from smallest to largest (default X1 < X2 < ...).
class WordOrder {
 public:
  explicit WordOrder(std::size_t nvars);
  WordOrder(std::vector<std::size_t> precedence);

  std::size_t nvars() const { return rank_.size(); }
  std::strong_ordering compare(const Word& a, const Word& b) const;
  bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }

 private:
  std::vector<std::size_t> rank_;  // rank_[letter] = position in precedence
};

struct WordGreater {
  const WordOrder* order;
  bool operator()(const Word& a, const Word& b) const { return order->less(b, a); }
};

/// `X1*X2*X1`, or `1` for the empty word.
std::string to_string(const Word& w);
Word parse_word(std::string_view text, std::size_t nvars);

}  // namespace escalier
