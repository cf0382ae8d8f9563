#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "escalier/polynomial.hpp"
#include "escalier/term.hpp"

namespace escalier {

struct LeadingData {
  Term term;
  Coeff coeff;
};

/// T(f) and lc(f) under `order`. Throws MathError for f = 0.
LeadingData leading_data(const Polynomial& f, const TermOrder& order);
Term leading_term(const Polynomial& f, const TermOrder& order);
Polynomial make_monic(const Polynomial& f, const TermOrder& order);

/// lc(g)^-1 (d/T(g)) g - lc(f)^-1 (d/T(f)) f with d = lcm(T(f), T(g)).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order);

/// A rewriting rule lead -> lead - poly; `poly` is monic with leading term `lead`.
struct ReductionRule {
  Term lead;
  Polynomial poly;
};

/// Full reduction of f by `rules`: every support term is rewritten until no
/// term of the result is divisible by a rule lead. For each term the first
/// applicable rule in list order is used; terms are visited in decreasing
/// `traversal` order. Termination needs every rule's tail to be smaller than
/// its lead in some term order, which need not be `traversal`.
Polynomial reduce_by_rules(const Polynomial& f, const std::vector<ReductionRule>& rules,
                           const TermOrder& traversal);

/// Fully reduced normal form of f with respect to G. Among applicable
/// reducers the one with the smallest leading term is used, then the lowest
/// index.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G, const TermOrder& order);

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped_coprime = 0;
  std::size_t pairs_skipped_chain = 0;
  std::size_t zero_reductions = 0;
};

/// Reduced Groebner basis of the ideal generated by F, sorted by increasing
/// leading term. Throws MathError when F has no nonzero element.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& F, const TermOrder& order,
                                   BuchbergerStats* stats = nullptr);

/// Interreduces a Groebner basis into the reduced one (monic, minimal,
/// tails irreducible), sorted by increasing leading term.
std::vector<Polynomial> reduce_basis(const std::vector<Polynomial>& G, const TermOrder& order);

struct SPairCheck {
  std::size_t i;
  std::size_t j;
  Polynomial remainder;
};

/// Normal forms of all pairwise S-polynomials of the nonzero elements of G.
std::vector<SPairCheck> check_s_pairs(const std::vector<Polynomial>& G, const TermOrder& order);
bool is_groebner(const std::vector<Polynomial>& G, const TermOrder& order);

/// Largest total degree of an element (the bound D must dominate this).
std::uint64_t gb_degree(const std::vector<Polynomial>& G);
/// Largest total degree of a leading term, i.e. of a minimal generator of T(I).
std::uint64_t lead_degree(const std::vector<Polynomial>& G, const TermOrder& order);

std::vector<Term> leading_terms(const std::vector<Polynomial>& G, const TermOrder& order);

}  // namespace escalier
