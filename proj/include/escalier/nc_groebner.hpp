#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "escalier/polynomial.hpp"
#include "escalier/word.hpp"

namespace escalier {

struct NcLeadingData {
  Word word;
  Coeff coeff;
};

NcLeadingData nc_leading_data(const NcPolynomial& f, const WordOrder& order);
Word nc_leading_word(const NcPolynomial& f, const WordOrder& order);
NcPolynomial nc_make_monic(const NcPolynomial& f, const WordOrder& order);

/// Two-sided rewriting rule: occurrences of `lead` are replaced by lead - poly.
struct NcRule {
  Word lead;
  NcPolynomial poly;  // monic, coefficient 1 at `lead`
};

/// Full two-sided reduction. Words are visited in decreasing `traversal`
/// order; inside a word the leftmost occurrence wins, then the longest lead,
/// then the lowest rule index.
NcPolynomial nc_reduce(const NcPolynomial& f, const std::vector<NcRule>& rules, const WordOrder& traversal);

std::vector<NcRule> nc_rules(const std::vector<NcPolynomial>& G, const WordOrder& order);

/// No support word of the result contains a leading word of G as a factor.
NcPolynomial nc_normal_form(const NcPolynomial& f, const std::vector<NcPolynomial>& G, const WordOrder& order);

struct Ambiguity {
  std::size_t i;
  std::size_t j;
  Word word;             // the overlap or inclusion word
  NcPolynomial residue;  // normal form of the associated S-element
};

/// All overlap and inclusion ambiguities between leading words whose
/// ambiguity word has length <= length_bound, each with its residue.
/// Throws MathError unless every element is monic.
std::vector<Ambiguity> nc_ambiguities(const std::vector<NcPolynomial>& G, const WordOrder& order,
                                      std::size_t length_bound = std::numeric_limits<std::size_t>::max());

/// True iff every ambiguity up to the bound resolves to zero (diamond lemma).
bool overlap_check(const std::vector<NcPolynomial>& G, const WordOrder& order,
                   std::size_t length_bound = std::numeric_limits<std::size_t>::max());

}  // namespace escalier
