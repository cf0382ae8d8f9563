#include <algorithm>
#include <random>

#include "doctest.h"
#include "escalier/error.hpp"
#include "escalier/groebner.hpp"
#include "helpers.hpp"

using namespace escalier;
using test_support::P;

TEST_CASE("prime field") {
  PrimeField f(7);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.reduce(-1) == 6);
  CHECK_THROWS_AS(f.inv(0), MathError);
  CHECK_THROWS_AS(PrimeField(8), MathError);
  PrimeField big;
  CHECK(big.prime() == 32003);
  for (Coeff a = 1; a < 200; ++a) CHECK(big.mul(a, big.inv(a)) == 1);
}

TEST_CASE("polynomial text round trip") {
  TermOrder dl(OrderKind::DegLex, 2);
  PrimeField f;
  auto g = P("X1^2 + X2", 2, f);
  CHECK(to_string(g, dl) == "X1^2 + X2");
  auto h = P("-X2 + 3", 2, f);
  CHECK(to_string(h, dl) == "32002*X2 + 3");
  CHECK(P(to_string(h, dl), 2, f) == h);
  CHECK(P("0", 2, f).is_zero());
  CHECK(P("X1 - X1", 2, f).is_zero());
  CHECK_THROWS_AS(P("X1 +", 2, f), ParseError);
}

TEST_CASE("leading data") {
  TermOrder dl(OrderKind::DegLex, 2);
  PrimeField f(7);
  auto g = P("3*X1*X2 + 2*X1^2 + X2", 2, f);
  auto [t, c] = leading_data(g, dl);
  CHECK(t == Term{1, 1});
  CHECK(c == 3);
  TermOrder lex(OrderKind::Lex, 2);
  CHECK(leading_term(P("X1^5 + X2", 2, f), lex) == Term{0, 1});
  CHECK_THROWS_AS(leading_data(Polynomial(2, f), dl), MathError);
}

TEST_CASE("s-polynomial") {
  TermOrder dl(OrderKind::DegLex, 2);
  PrimeField f;
  auto s = s_polynomial(P("X1^2 + X2", 2, f), P("X2^2 + 1", 2, f), dl);
  // S = X1^2*(X2^2+1) - X2^2*(X1^2+X2)
  CHECK(s == P("X1^2 - X2^3", 2, f));
  auto z = s_polynomial(P("X1^2", 2, f), P("X1*X2", 2, f), dl);
  CHECK(z.is_zero());
  auto t = s_polynomial(P("X1", 2, f), P("X1", 2, f), dl);
  CHECK(t.is_zero());
}

TEST_CASE("normal form fully reduces") {
  TermOrder dl(OrderKind::DegLex, 2);
  PrimeField f;
  std::vector<Polynomial> G{P("X1^2 + X2", 2, f)};
  CHECK(normal_form(P("X1^2", 2, f), G, dl) == P("-X2", 2, f));
  CHECK(normal_form(P("X1^3 + X2", 2, f), G, dl) == P("-X1*X2 + X2", 2, f));
  CHECK(normal_form(P("X1^2 + X2", 2, f), G, dl).is_zero());
  CHECK(normal_form(P("X2^3", 2, f), G, dl) == P("X2^3", 2, f));
  // tail terms are reduced too
  auto r = normal_form(P("X2^5 + X1^4", 2, f), G, dl);
  CHECK(r == P("X2^5 + X2^2", 2, f));
}

TEST_CASE("buchberger on known inputs") {
  TermOrder dl(OrderKind::DegLex, 2);
  PrimeField f;
  std::vector<Polynomial> F{P("X1^2 + X2", 2, f), P("X1^3", 2, f)};
  CHECK(!is_groebner(F, dl));
  auto G = buchberger(F, dl);
  CHECK(is_groebner(G, dl));
  // X1^3 - X1*(X1^2+X2) = -X1*X2, then X2*(X1^2+X2) - X1*(X1*X2) = X2^2
  std::vector<Polynomial> expect{P("X1^2 + X2", 2, f), P("X1*X2", 2, f), P("X2^2", 2, f)};
  CHECK(G == expect);
  CHECK(gb_degree(G) == 2);

  std::vector<Polynomial> zd{P("X1^2 + X2", 2, f), P("X2^2 + 1", 2, f)};
  CHECK(is_groebner(zd, dl));
  CHECK(buchberger(zd, dl) == zd);

  CHECK(buchberger({P("X1 + 1", 2, f), P("X1", 2, f)}, dl) == std::vector<Polynomial>{P("1", 2, f)});
  CHECK_THROWS_AS(buchberger({Polynomial(2, f)}, dl), MathError);

  BuchbergerStats st;
  buchberger({P("X1*X2 - 1", 3, f), P("X2*X3 - 1", 3, f), P("X1*X3 - X2", 3, f)}, TermOrder(OrderKind::DegRevLex, 3),
             &st);
  CHECK(st.pairs_considered > 0);
}

TEST_CASE("check_s_pairs reports residues") {
  TermOrder dl(OrderKind::DegLex, 2);
  PrimeField f;
  auto checks = check_s_pairs({P("X1^2 + X2", 2, f), P("X1^3", 2, f)}, dl);
  REQUIRE(checks.size() == 1);
  CHECK(!checks[0].remainder.is_zero());
}

TEST_CASE("reduced basis properties on random ideals") {
  std::mt19937_64 rng(42);
  for (auto kind : {OrderKind::Lex, OrderKind::DegLex, OrderKind::DegRevLex}) {
    for (int it = 0; it < 15; ++it) {
      std::size_t n = 2 + it % 2;
      TermOrder ord(kind, n);
      PrimeField f(32003);
      auto F = test_support::random_ideal(rng, n, f, 3, 2 + it % 2, kind == OrderKind::Lex ? 2 : 3);
      auto G = buchberger(F, ord);
      CHECK(is_groebner(G, ord));
      auto leads = leading_terms(G, ord);
      for (std::size_t i = 0; i < G.size(); ++i) {
        CHECK(leading_data(G[i], ord).coeff == 1);
        if (i) CHECK(ord.less(leads[i - 1], leads[i]));
        // no support term of g_i is divisible by another lead
        for (const auto& [t, c] : G[i].terms())
          for (std::size_t j = 0; j < G.size(); ++j)
            if (j != i) CHECK(!divides(leads[j], t));
      }
      for (const auto& g : F) CHECK(normal_form(g, G, ord).is_zero());
      // canonicity: rescaled and permuted input gives the same basis
      auto F2 = F;
      std::shuffle(F2.begin(), F2.end(), rng);
      for (auto& g : F2) g = g.scaled(1 + rng() % 32002);
      CHECK(buchberger(F2, ord) == G);
    }
  }
}
