#include <random>

#include "doctest.h"
#include "escalier/error.hpp"
#include "escalier/forge.hpp"
#include "escalier/random.hpp"
#include "helpers.hpp"

using namespace escalier;
using test_support::P;

namespace {

// Random polynomials of degree <= delta in the given ideal.
std::vector<Polynomial> low_degree_members(Rng& rng, const std::vector<Polynomial>& gens, std::uint64_t delta,
                                           std::size_t count) {
  std::vector<Polynomial> out;
  const std::size_t n = gens.front().nvars();
  while (out.size() < count) {
    Polynomial f(n, gens.front().field());
    for (const auto& g : gens)
      if (g.degree() <= delta) f += random_polynomial(rng, n, g.field(), delta - g.degree(), 2) * g;
    out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_CASE("forge on J = (X1^2), degrevlex") {
  TermOrder o(OrderKind::DegRevLex, 2);
  auto f = build_counterexample({P("X1^2", 2)}, o, 3);
  CHECK(f.omega == Term{4, 0});
  CHECK(f.h0 == P("X1^4", 2));
  CHECK(f.H == std::vector<Polynomial>{P("X1^4", 2), P("X1^2*X2", 2)});
  CHECK(f.H_is_groebner);

  auto r = demonstrate_bound_necessity(f);
  CHECK(r.small.generators == std::vector<Term>{Term{2, 1}});
  CHECK(r.big.generators == std::vector<Term>{Term{2, 1}, Term{4, 0}});
  CHECK(r.small_matches);
  CHECK(r.big_matches);
  CHECK(r.agree_below);
  CHECK(r.differ);
}

TEST_CASE("forge on J = (X1^2 + X2), deglex") {
  TermOrder o(OrderKind::DegLex, 2);
  auto f = build_counterexample({P("X1^2 + X2", 2)}, o, 3);
  CHECK(f.omega == Term{4, 0});
  CHECK(f.h0 == P("X1^4 - X2^2", 2));
  CHECK(f.H.size() == 2);
  CHECK(f.H[1] == P("X1^2*X2 + X2^2", 2));
  CHECK(f.closed_form_matches);
  auto r = demonstrate_bound_necessity(f);
  CHECK(r.small_matches);
  CHECK(r.big_matches);
  CHECK(r.differ);
}

TEST_CASE("closed form is reported, not trusted") {
  TermOrder o(OrderKind::DegLex, 2);
  auto f = build_counterexample({P("X1^2", 2), P("X2", 2)}, o, 3);
  CHECK(f.omega == Term{4, 0});
  CHECK(f.omega_closed_form == Term{3, 1});
  CHECK(!f.closed_form_matches);
}

TEST_CASE("forge preconditions") {
  CHECK_THROWS_AS(build_counterexample({P("X1^2", 2)}, TermOrder(OrderKind::Lex, 2), 3), MathError);
  CHECK_THROWS_AS(build_counterexample({P("X1^2", 2)}, TermOrder(OrderKind::DegLex, 2), 2), MathError);
  CHECK_THROWS_AS(build_counterexample({P("X1", 1)}, TermOrder(OrderKind::DegLex, 1), 3), MathError);
}

TEST_CASE("forged pair agrees up to degree delta") {
  Rng rng(99);
  const PrimeField F;
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t n = 2 + trial % 2;
    TermOrder o(trial % 2 ? OrderKind::DegRevLex : OrderKind::DegLex, n);
    std::vector<Polynomial> J{P("X1^2", n) + random_polynomial(rng, n, F, 1, 2)};
    if (trial % 3 == 0) J.push_back(random_polynomial(rng, n, F, 2, 3));
    const auto d = gb_degree(buchberger(J, o));
    auto f = build_counterexample(J, o, static_cast<Exponent>(d + 1));
    CAPTURE(trial);
    CHECK(f.H_is_groebner);
    CHECK(gb_degree(f.oracle_Idelta->private_basis()) > f.delta);
    CHECK(f.omega == Term::variable(n, 0, static_cast<Exponent>(f.delta + 1)));

    // same membership and canonical forms below degree delta + 1
    for (const auto& m : low_degree_members(rng, f.oracle_Idelta->private_basis(), f.delta, 10))
      CHECK(normal_form(m, f.oracle_I->private_basis(), o).is_zero());
    for (int k = 0; k < 20; ++k) {
      auto t = random_term_of_degree_at_most(rng, n, f.delta);
      CHECK(f.oracle_I->can_term(t) == f.oracle_Idelta->can_term(t));
    }
    auto r = demonstrate_bound_necessity(f);
    CHECK(r.small_matches);
    CHECK(r.big_matches);
    CHECK(r.agree_below);
    CHECK(r.differ);
  }
}
