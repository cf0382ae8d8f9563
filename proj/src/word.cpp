#include "escalier/word.hpp"

#include <algorithm>
#include <numeric>

#include "escalier/error.hpp"
#include "text_scan.hpp"

namespace escalier {

Word::Word(std::size_t nvars, std::vector<Letter> letters) : nvars_(nvars), letters_(std::move(letters)) {
  for (Letter l : letters_)
    if (l >= nvars_) throw MathError("letter index out of range for alphabet of size " + std::to_string(nvars_));
}

Word Word::sub(std::size_t pos, std::size_t len) const {
  Word w(nvars_);
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                    letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return w;
}

Word concat(const Word& l, const Word& m, const Word& r) {
  if (l.nvars() != m.nvars() || m.nvars() != r.nvars()) throw MathError("word alphabet mismatch");
  std::vector<Letter> out;
  out.reserve(l.size() + m.size() + r.size());
  out.insert(out.end(), l.letters().begin(), l.letters().end());
  out.insert(out.end(), m.letters().begin(), m.letters().end());
  out.insert(out.end(), r.letters().begin(), r.letters().end());
  return Word(m.nvars(), std::move(out));
}

Word operator*(const Word& a, const Word& b) { return concat(a, b, Word(a.nvars())); }

std::vector<std::size_t> occurrence_positions(const Word& pattern, const Word& w) {
  std::vector<std::size_t> pos;
  if (pattern.size() > w.size()) return pos;
  for (std::size_t i = 0; i + pattern.size() <= w.size(); ++i)
    if (std::equal(pattern.letters().begin(), pattern.letters().end(), w.letters().begin() + static_cast<std::ptrdiff_t>(i)))
      pos.push_back(i);
  return pos;
}

std::vector<Occurrence> subword_occurrences(const Word& pattern, const Word& w) {
  std::vector<Occurrence> out;
  for (std::size_t i : occurrence_positions(pattern, w))
    out.push_back({w.sub(0, i), w.sub(i + pattern.size(), w.size() - i - pattern.size())});
  return out;
}

bool is_factor(const Word& pattern, const Word& w) {
  if (pattern.empty()) return true;
  if (pattern.size() > w.size()) return false;
  return std::search(w.letters().begin(), w.letters().end(), pattern.letters().begin(), pattern.letters().end()) !=
         w.letters().end();
}

std::optional<std::pair<Letter, Word>> split_left(const Word& w) {
  if (w.empty()) return std::nullopt;
  return std::pair{w[0], w.sub(1, w.size() - 1)};
}

std::optional<std::pair<Word, Letter>> split_right(const Word& w) {
  if (w.empty()) return std::nullopt;
  return std::pair{w.sub(0, w.size() - 1), w[w.size() - 1]};
}

WordOrder::WordOrder(std::size_t nvars) : rank_(nvars) {
  std::iota(rank_.begin(), rank_.end(), std::size_t{0});
}

WordOrder::WordOrder(std::vector<std::size_t> precedence) : rank_(precedence.size()) {
  std::vector<bool> seen(precedence.size(), false);
  for (std::size_t r = 0; r < precedence.size(); ++r) {
    std::size_t letter = precedence[r];
    if (letter >= precedence.size() || seen[letter]) throw MathError("letter precedence is not a permutation");
    seen[letter] = true;
    rank_[letter] = r;
  }
}

std::strong_ordering WordOrder::compare(const Word& a, const Word& b) const {
  if (a.nvars() != nvars() || b.nvars() != nvars()) throw MathError("word order alphabet mismatch");
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return rank_[a[i]] <=> rank_[b[i]];
  return std::strong_ordering::equal;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '*';
    s += 'X' + std::to_string(w[i] + 1);
  }
  return s;
}

namespace detail {

void parse_word_factors(Scanner& sc, std::vector<Letter>& letters, std::size_t nvars) {
  do {
    std::size_t v = sc.variable(nvars);
    std::uint64_t e = 1;
    if (sc.accept('^')) e = sc.number();
    letters.insert(letters.end(), e, static_cast<Letter>(v));
  } while (sc.accept('*'));
}

}  // namespace detail

Word parse_word(std::string_view text, std::size_t nvars) {
  detail::Scanner sc(text);
  std::vector<Letter> letters;
  if (sc.peek() == '1') {
    if (sc.number() != 1) sc.fail("only the empty word 1 is allowed");
  } else {
    detail::parse_word_factors(sc, letters, nvars);
  }
  if (!sc.done()) sc.fail("trailing characters");
  return Word(nvars, std::move(letters));
}

}  // namespace escalier
