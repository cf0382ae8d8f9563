#include <random>

#include "doctest.h"
#include "escalier/error.hpp"
#include "escalier/word.hpp"
#include "oracles.hpp"

using namespace escalier;

namespace {

Word random_word(std::mt19937_64& rng, std::size_t n, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<Letter> let(0, static_cast<Letter>(n - 1));
  std::vector<Letter> v(len(rng));
  for (auto& x : v) x = let(rng);
  return Word(n, v);
}

}  // namespace

TEST_CASE("concat") {
  Word one(2), w(2, {1, 0});
  CHECK(concat(one, w, one) == w);
  CHECK(concat(Word(2, {0}), Word(2, {1, 0}), Word(2, {1})) == Word(2, {0, 1, 0, 1}));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    Word a = random_word(rng, 3, 4), b = random_word(rng, 3, 4), c = random_word(rng, 3, 4);
    CHECK(concat(a, b, c).size() == a.size() + b.size() + c.size());
  }
  CHECK_THROWS_AS(concat(Word(2), Word(3), Word(2)), MathError);
  CHECK_THROWS_AS(Word(2, {2}), MathError);
}

TEST_CASE("subword occurrences") {
  Word xy(2, {0, 1}), w(2, {0, 1, 0, 1});
  auto occ = subword_occurrences(xy, w);
  REQUIRE(occ.size() == 2);
  CHECK(occ[0].prefix == Word(2));
  CHECK(occ[0].suffix == Word(2, {0, 1}));
  CHECK(occ[1].prefix == Word(2, {0, 1}));
  CHECK(occ[1].suffix == Word(2));
  CHECK(subword_occurrences(Word(2, {1, 1}), w).empty());
  // overlapping occurrences are all reported
  CHECK(subword_occurrences(Word(1, {0, 0}), Word(1, {0, 0, 0})).size() == 2);
  CHECK(subword_occurrences(Word(2), Word(2, {0, 1})).size() == 3);

  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    Word p = random_word(rng, 2, 3), t = random_word(rng, 2, 6);
    CHECK(is_factor(p, t) == oracle_ref::is_factor_ref(p, t));
    for (const auto& o : subword_occurrences(p, t)) CHECK(concat(o.prefix, p, o.suffix) == t);
  }
}

TEST_CASE("splits") {
  Word w(3, {2, 0, 1});
  auto l = split_left(w);
  REQUIRE(l);
  CHECK(l->first == 2);
  CHECK(l->second == Word(3, {0, 1}));
  auto r = split_right(w);
  REQUIRE(r);
  CHECK(r->first == Word(3, {2, 0}));
  CHECK(r->second == 1);
  CHECK(!split_left(Word(3)));
  CHECK(!split_right(Word(3)));
  auto single = split_left(Word(3, {1}));
  REQUIRE(single);
  CHECK(single->second.empty());
}

TEST_CASE("word order") {
  WordOrder ord2(2);
  // length first
  CHECK(ord2.less(Word(2, {1}), Word(2, {0, 0})));
  // then leftmost letter, X1 < X2
  CHECK(ord2.less(Word(2, {0, 1}), Word(2, {1, 0})));
  CHECK(ord2.less(Word(2), Word(2, {0})));
  WordOrder ord(3);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    Word a = random_word(rng, 3, 4), b = random_word(rng, 3, 4), l = random_word(rng, 3, 2),
         r = random_word(rng, 3, 2);
    if (ord.less(a, b)) CHECK(ord.less(concat(l, a, r), concat(l, b, r)));
    CHECK((ord.compare(a, b) == 0) == (a == b));
    CHECK(!ord.less(a, Word(3)));
  }
}

TEST_CASE("word text") {
  CHECK(to_string(Word(2, {0, 1, 0})) == "X1*X2*X1");
  CHECK(to_string(Word(2)) == "1");
  CHECK(parse_word("X1*X2*X1", 2) == Word(2, {0, 1, 0}));
  CHECK(parse_word("X2^2*X1", 2) == Word(2, {1, 1, 0}));
  CHECK(parse_word("1", 2) == Word(2));
  CHECK_THROWS_AS(parse_word("X3", 2), ParseError);
}
