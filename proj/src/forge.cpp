#include "escalier/forge.hpp"

#include <algorithm>

namespace escalier {

namespace {

std::vector<Term> leads_in_box(const std::vector<Polynomial>& G, const TermOrder& order, Exponent D) {
  std::vector<Term> out;
  Box box{order.nvars(), D};
  for (const auto& t : leading_terms(G, order))
    if (box.contains(t)) out.push_back(t);
  return minimal_elements(out);
}

}  // namespace

ForgeOutput build_counterexample(const std::vector<Polynomial>& J_generators, const TermOrder& order, Exponent delta) {
  const std::size_t n = order.nvars();
  if (n < 2) throw MathError("forge needs at least two variables");
  if (!order.degree_compatible()) throw MathError("forge needs a degree-compatible order");
  for (std::size_t i = 0; i < n; ++i)
    if (order.precedence()[i] != i) throw MathError("forge needs the precedence X1 < X2 < ... < Xn");

  ForgeOutput f;
  f.order = order;
  f.delta = delta;
  f.J_basis = buchberger(J_generators, order);
  if (f.J_basis.empty() || f.J_basis.front().is_zero()) throw MathError("forge needs a nonzero J");
  const std::uint64_t dJ = gb_degree(f.J_basis);
  if (delta < dJ + 1)
    throw MathError("delta must be at least d(J) + 1 = " + std::to_string(dJ + 1) + ", got " + std::to_string(delta));

  const PrimeField& k = f.J_basis.front().field();
  auto leads = leading_terms(f.J_basis, order);

  // omega: explicit minimization over the degree delta+1 part of T(J)
  std::optional<Term> best;
  for (const auto& t : terms_of_degree(n, delta + 1)) {
    bool in_T = std::any_of(leads.begin(), leads.end(), [&](const Term& l) { return divides(l, t); });
    if (in_T && (!best || order.less(t, *best))) best = t;
  }
  f.omega = *best;  // nonempty: any lead times a power of X1 qualifies

  // closed form with gamma_s = the last element when sorted by decreasing
  // degree, then decreasing lead
  std::vector<std::size_t> idx(f.J_basis.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    auto da = f.J_basis[a].degree(), db = f.J_basis[b].degree();
    if (da != db) return da > db;
    return order.less(leads[b], leads[a]);
  });
  const std::size_t s = idx.back();
  const auto ds = f.J_basis[s].degree();
  f.omega_closed_form = Term::variable(n, 0, static_cast<Exponent>(delta + 1 - ds)) * leads[s];
  f.closed_form_matches = f.omega_closed_form == f.omega;

  f.h0 = Polynomial::monomial(f.omega, 1, k) - normal_form(Polynomial::monomial(f.omega, 1, k), f.J_basis, order);
  const Term x2 = Term::variable(n, 1);
  for (const auto& g : f.J_basis) f.I_generators.push_back(g.times(1, x2));
  f.H.push_back(f.h0);
  f.H.insert(f.H.end(), f.I_generators.begin(), f.I_generators.end());
  f.H_is_groebner = is_groebner(f.H, order);

  f.oracle_I = std::make_unique<GroebnerOracle>(f.I_generators, order);
  f.oracle_Idelta = std::make_unique<GroebnerOracle>(f.H, order);
  return f;
}

BoundReport demonstrate_bound_necessity(ForgeOutput& f, Exponent D_small, Exponent D_big) {
  BoundReport r;
  r.D_small = D_small ? D_small : f.delta;
  r.D_big = D_big ? D_big : f.delta + 1;
  const std::size_t n = f.order.nvars();

  r.small = reconstruct(*f.oracle_Idelta, n, r.D_small);
  r.big = reconstruct(*f.oracle_Idelta, n, r.D_big);
  r.small_on_I = reconstruct(*f.oracle_I, n, r.D_small);

  r.expected_small = leads_in_box(f.oracle_I->private_basis(), f.order, r.D_small);
  r.expected_big = leads_in_box(f.oracle_Idelta->private_basis(), f.order, r.D_big);
  r.small_matches = r.small.generators == r.expected_small;
  r.big_matches = r.big.generators == r.expected_big;
  r.agree_below = r.small.generators == r.small_on_I.generators;
  r.differ = r.small.generators != r.big.generators;
  return r;
}

}  // namespace escalier
