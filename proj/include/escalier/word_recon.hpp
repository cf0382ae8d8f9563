#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "escalier/oracle.hpp"

namespace escalier {

/// Support words of g that are not a factor of another support word,
/// shortest first (ties by letter sequence). Needs no term ordering.
/// Throws MathError for g = 0.
std::vector<Word> candidate_terms(const NcPolynomial& g);

/// Shrinks a word of T(I) to a minimal generator that is a factor of it:
/// first drop leading letters while the rest stays in T(I), then drop the
/// letter before the last while the left part stays in T(I).
/// Throws MathError when start is normal.
Word peel(NcCanOracle& o, const Word& start);

struct Problem1Options {
  /// Route every query through masked_can with a random two-part split.
  bool masked = false;
  std::uint64_t mask_seed = 0;
  std::size_t max_rounds = 100000;
};

struct Problem1Result {
  std::vector<NcPolynomial> H;     // t - Can(t) for each peeled generator t, in discovery order
  std::vector<Word> leads;         // the peeled generators
  std::vector<std::string> trace;  // "round <k>: peeled <word>, |G| residual supports <m>"
  std::size_t queries_used = 0;
};

/// Builds H with nc_normal_form(g, H) = 0 for every g in G. Throws MathError
/// if some g is not in the oracle's ideal.
Problem1Result solve_problem1(NcCanOracle& o, const std::vector<NcPolynomial>& G, const Problem1Options& opts = {});

}  // namespace escalier
