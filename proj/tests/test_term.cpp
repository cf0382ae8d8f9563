#include <limits>
#include <random>
#include <set>

#include "doctest.h"
#include "escalier/error.hpp"
#include "escalier/term.hpp"
#include "oracles.hpp"

using namespace escalier;

namespace {

int as_int(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

Term add(const Term& a, const Term& b) { return a * b; }

}  // namespace

TEST_CASE("compare on small examples") {
  TermOrder deglex2(OrderKind::DegLex, 2);
  CHECK(deglex2.compare(Term{0, 0}, Term{1, 0}) < 0);
  CHECK(deglex2.compare(Term{2, 0}, Term{1, 1}) < 0);
  CHECK(deglex2.compare(Term{1, 1}, Term{1, 1}) == 0);

  // (1,1,0) vs (0,0,2): the brute-force definition decides, X1 smallest.
  TermOrder drl3(OrderKind::DegRevLex, 3);
  CHECK(oracle_ref::degrevlex_cmp(Term{1, 1, 0}, Term{0, 0, 2}) == -1);
  CHECK(drl3.compare(Term{1, 1, 0}, Term{0, 0, 2}) < 0);

  CHECK_THROWS_AS((deglex2.compare(Term{1, 0}, Term{1, 0, 0})), MathError);
}

TEST_CASE("orders agree with reference definitions on all low-degree terms") {
  for (std::size_t n : {1u, 2u, 3u, 4u}) {
    auto box = oracle_ref::box_ref(n, 3);
    TermOrder lex(OrderKind::Lex, n), dl(OrderKind::DegLex, n), drl(OrderKind::DegRevLex, n);
    for (const auto& a : box)
      for (const auto& b : box) {
        REQUIRE(as_int(lex.compare(a, b)) == oracle_ref::lex_cmp(a, b));
        REQUIRE(as_int(dl.compare(a, b)) == oracle_ref::deglex_cmp(a, b));
        REQUIRE(as_int(drl.compare(a, b)) == oracle_ref::degrevlex_cmp(a, b));
      }
  }
}

TEST_CASE("custom precedence permutes variables") {
  // X2 < X1 under lex
  TermOrder lex(OrderKind::Lex, std::vector<std::size_t>{1, 0});
  CHECK(lex.less(Term{0, 5}, Term{1, 0}));
  CHECK_THROWS_AS((TermOrder(OrderKind::Lex, std::vector<std::size_t>{0, 0})), MathError);
}

TEST_CASE("order properties on random samples") {
  std::mt19937_64 rng(7);
  for (auto kind : {OrderKind::Lex, OrderKind::DegLex, OrderKind::DegRevLex}) {
    for (std::size_t n : {2u, 3u, 5u}) {
      TermOrder ord(kind, n);
      for (int it = 0; it < 300; ++it) {
        Term a = oracle_ref::random_term(rng, n, 4), b = oracle_ref::random_term(rng, n, 4),
             c = oracle_ref::random_term(rng, n, 4);
        if (ord.less(a, b)) CHECK(ord.less(add(a, c), add(b, c)));
        CHECK(as_int(ord.compare(a, b)) == -as_int(ord.compare(b, a)));
        if (ord.less(a, b) && ord.less(b, c)) CHECK(ord.less(a, c));
        CHECK(!ord.less(a, Term::one(n)));
        CHECK((ord.compare(a, b) == 0) == (a == b));
      }
    }
  }
}

TEST_CASE("divisibility, lcm, predecessor") {
  CHECK(divides(Term{0, 0}, Term{3, 5}));
  CHECK(!divides(Term{2, 2}, Term{2, 1}));
  CHECK(divides(Term{1, 3}, Term{1, 3}));
  CHECK(lcm(Term{2, 0}, Term{0, 3}) == Term{2, 3});
  CHECK(lcm(Term{1, 2}, Term{2, 1}) == Term{2, 2});
  CHECK(lcm(Term{4, 1}, Term{4, 1}) == Term{4, 1});
  CHECK(gcd(Term{2, 5}, Term{3, 1}) == Term{2, 1});
  CHECK_THROWS_AS((divides(Term{1}, Term{1, 1})), MathError);

  // 1-based variable 2 in the text is index 1 here
  CHECK(predecessor(Term{2, 1}, 1) == Term{2, 0});
  CHECK(!predecessor(Term{2, 0}, 1).has_value());
  CHECK(!predecessor(Term{0, 0}, 0).has_value());
  CHECK_THROWS_AS((predecessor(Term{1, 1}, 2)), MathError);

  std::mt19937_64 rng(11);
  for (int it = 0; it < 500; ++it) {
    Term a = oracle_ref::random_term(rng, 3, 3), b = oracle_ref::random_term(rng, 3, 3);
    CHECK(divides(a, b) == (lcm(a, b) == b));
    CHECK(divides(a, b) == oracle_ref::divides_ref(a, b));
    for (std::size_t v = 0; v < 3; ++v)
      if (auto p = predecessor(a, v)) CHECK(*p * Term::variable(3, v) == a);
  }
}

TEST_CASE("term product overflow is reported") {
  Term big{std::numeric_limits<Exponent>::max()};
  CHECK_THROWS_AS(big * Term{1}, MathError);
  CHECK_THROWS_AS((Term{1, 0} / Term{0, 1}), MathError);
}

TEST_CASE("box enumeration") {
  CHECK(box_enumerate(Box{1, 2}).size() == 3);
  CHECK(box_enumerate(Box{2, 1}).size() == 4);
  auto b3 = box_enumerate(Box{3, 8});
  CHECK(b3.size() == 729);
  CHECK(Box{3, 8}.size() == 729);
  std::set<Term> seen(b3.begin(), b3.end());
  CHECK(seen.size() == 729);

  auto b1 = box_enumerate(Box{1, 2});
  CHECK(b1 == std::vector<Term>{Term{0}, Term{1}, Term{2}});

  TermOrder drl(OrderKind::DegRevLex, 3);
  auto sorted = box_enumerate(Box{3, 2}, drl);
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    CHECK(sorted[i - 1].degree() <= sorted[i].degree());
    if (sorted[i - 1].degree() == sorted[i].degree()) CHECK(drl.less(sorted[i - 1], sorted[i]));
  }
  CHECK(terms_of_degree(3, 2).size() == 6);
}

TEST_CASE("term text round trip") {
  CHECK(to_string(Term{2, 0, 1}) == "X1^2*X3");
  CHECK(to_string(Term{0, 0}) == "1");
  CHECK(parse_term(" X1 ^ 2 * X3 ", 3) == Term{2, 0, 1});
  CHECK(parse_term("1", 2) == Term{0, 0});
  CHECK(parse_term("X2*X2", 2) == Term{0, 2});
  CHECK_THROWS_AS(parse_term("X4", 3), ParseError);
  CHECK_THROWS_AS(parse_term("X1^", 3), ParseError);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 100; ++it) {
    Term t = oracle_ref::random_term(rng, 4, 5);
    CHECK(parse_term(to_string(t), 4) == t);
  }
}
