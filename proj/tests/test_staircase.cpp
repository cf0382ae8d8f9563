#include <chrono>
#include <random>
#include <set>

#include "doctest.h"
#include "escalier/error.hpp"
#include "escalier/staircase.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace escalier;
using test_support::P;

namespace {

std::vector<Polynomial> monomials(const std::vector<Term>& ts) {
  std::vector<Polynomial> out;
  for (const auto& t : ts) out.push_back(Polynomial::monomial(t, 1, PrimeField()));
  return out;
}

std::set<Term> as_set(const std::vector<Term>& v) { return {v.begin(), v.end()}; }

const std::vector<Term> kFourCorners{{2, 2}, {1, 3}, {4, 1}, {0, 8}};
const std::vector<Term> kOneCorner{{3, 2}};
const std::vector<Term> kTwoCorners{{2, 4}, {4, 3}};
const std::vector<Term> kThreeVar{{1, 3, 4}, {0, 5, 3}, {3, 2, 2}, {4, 0, 1}};

}  // namespace

TEST_CASE("diagonal probe") {
  TermOrder dl2(OrderKind::DegLex, 2), dl3(OrderKind::DegLex, 3);
  GroebnerOracle o_four(monomials(kFourCorners), dl2);
  CHECK(diagonal_probe(o_four, 2, 8).found == Exponent{2});
  GroebnerOracle o6(monomials(kThreeVar), dl3);
  CHECK(diagonal_probe(o6, 3, 8).found == Exponent{3});
  GroebnerOracle z({Polynomial(3, PrimeField())}, dl3);
  auto out = diagonal_probe(z, 3, 6);
  CHECK(out.zero_ideal());
  CHECK(z.query_count() == 6);
}

TEST_CASE("classify") {
  TermOrder dl(OrderKind::DegLex, 2);
  GroebnerOracle o_four(monomials(kFourCorners), dl);
  CHECK(classify(o_four, Term{2, 2}) == CaseTag::Corner);
  GroebnerOracle o_one(monomials(kOneCorner), dl);
  CHECK(classify(o_one, Term{3, 3}) == CaseTag::Border);
  GroebnerOracle o_two(monomials(kTwoCorners), dl);
  CHECK(classify(o_two, Term{4, 4}) == CaseTag::Interior);
  CHECK_THROWS_AS(classify(o_two, Term{1, 1}), MathError);
}

TEST_CASE("two-variable worked examples") {
  TermOrder dl(OrderKind::DegLex, 2);
  struct Case {
    std::vector<Term> gens;
    Exponent D;
  };
  for (const auto& c : {Case{kFourCorners, 8}, Case{kOneCorner, 5}, Case{kTwoCorners, 7}}) {
    GroebnerOracle o(monomials(c.gens), dl);
    auto got = reconstruct_2var(o, c.D);
    CHECK(as_set(got) == as_set(c.gens));
    CHECK(o.query_count() < (c.D + 1) * (c.D + 1));

    GroebnerOracle b(monomials(c.gens), dl);
    CHECK(as_set(brute_force_generators(b, 2, c.D)) == as_set(c.gens));
    CHECK(b.query_count() == (c.D + 1) * (c.D + 1));

    StaircaseOptions bin{SearchMode::Binary};
    GroebnerOracle ob(monomials(c.gens), dl);
    CHECK(as_set(reconstruct_2var(ob, c.D, bin)) == as_set(c.gens));
  }
}

TEST_CASE("three-variable worked example") {
  TermOrder dl(OrderKind::DegLex, 3);
  GroebnerOracle o(monomials(kThreeVar), dl);
  auto r = reconstruct(o, 3, 8);
  CHECK(as_set(r.generators) == as_set(kThreeVar));
  CHECK(r.queries_used < 729);
  CHECK(r.queries_used == o.query_count());
  GroebnerOracle b(monomials(kThreeVar), dl);
  CHECK(as_set(brute_force_generators(b, 3, 8)) == as_set(kThreeVar));
  CHECK(b.query_count() == 729);
  GroebnerOracle p(monomials(kThreeVar), dl);
  CHECK(as_set(brute_force_generators_parallel(p, 3, 8)) == as_set(kThreeVar));
  CHECK(p.query_count() == 729);
}

TEST_CASE("degenerate ideals") {
  for (std::size_t n : {1u, 2u, 3u, 4u}) {
    TermOrder dl(OrderKind::DegLex, n);
    GroebnerOracle z({Polynomial(n, PrimeField())}, dl);
    auto r = reconstruct(z, n, 4);
    CHECK(r.generators.empty());
    CHECK(r.reduced_basis.empty());
    GroebnerOracle unit({Polynomial::constant(n, 3, PrimeField())}, dl);
    auto u = reconstruct(unit, n, 4);
    REQUIRE(u.generators.size() == 1);
    CHECK(u.generators[0].is_one());
    GroebnerOracle unit0({Polynomial::constant(n, 3, PrimeField())}, dl);
    CHECK(reconstruct(unit0, n, 0).generators == std::vector<Term>{Term(n)});
    GroebnerOracle x0({P("X1", n)}, dl);
    CHECK(reconstruct(x0, n, 0).generators.empty());
  }
  TermOrder d1(OrderKind::DegLex, 1);
  GroebnerOracle o1({P("X1^3 + 1", 1)}, d1);
  auto r1 = reconstruct(o1, 1, 5);
  CHECK(r1.generators == std::vector<Term>{Term{3}});
  CHECK(r1.reduced_basis[0] == P("X1^3 + 1", 1));
  GroebnerOracle o1b({P("X1^3 + 1", 1)}, d1);
  CHECK(reconstruct(o1b, 1, 2).generators.empty());
  CHECK_THROWS_AS(reconstruct(o1b, 2, 2), MathError);
}

TEST_CASE("random monomial ideals match brute force") {
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 150; ++it) {
    std::size_t n = 2 + it % 3;
    Exponent D = 3 + rng() % 4;
    auto gens = oracle_ref::random_monomial_gens(rng, n, 6, 1 + rng() % 5);
    TermOrder ord(OrderKind::DegRevLex, n);
    GroebnerOracle o(monomials(gens), ord);
    auto r = reconstruct(o, n, D);
    auto expect = oracle_ref::staircase_ref(gens, n, D);
    REQUIRE(as_set(r.generators) == expect);
    // soundness via 2n extra queries per generator
    for (const auto& t : r.generators) {
      CHECK(o.member_T(t));
      for (std::size_t v = 0; v < n; ++v)
        if (auto p = predecessor(t, v)) CHECK(!o.member_T(*p));
    }
    for (std::size_t i = 0; i < r.generators.size(); ++i)
      for (std::size_t j = 0; j < r.generators.size(); ++j)
        if (i != j) CHECK(!divides(r.generators[i], r.generators[j]));
  }
}

TEST_CASE("general ideals: reduced basis matches buchberger") {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 20; ++it) {
    std::size_t n = 2 + it % 2;
    TermOrder ord(it % 2 ? OrderKind::DegLex : OrderKind::DegRevLex, n);
    auto Fs = test_support::random_ideal(rng, n, PrimeField(), n, 3, 2);
    auto G = buchberger(Fs, ord);
    Exponent D = static_cast<Exponent>(std::max<std::uint64_t>(1, gb_degree(G)));
    GroebnerOracle o(Fs, ord);
    auto r = reconstruct(o, n, D);
    REQUIRE(r.reduced_basis.size() == G.size());
    for (const auto& g : r.reduced_basis) {
      CHECK(o.can_poly(g).is_zero());
      CHECK(std::find(G.begin(), G.end(), g) != G.end());
    }
  }
}
