#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "escalier/oracle.hpp"
#include "escalier/term.hpp"

namespace escalier {

/// Outcome of the scan along the diagonal w^j, w = X1*...*Xn.
struct ProbeOutcome {
  /// First j in 1..D with w^j in T(I); empty when w^D is still normal,
  /// which means T(I) does not meet the box.
  std::optional<Exponent> found;
  bool zero_ideal() const { return !found.has_value(); }
};

enum class CaseTag { Corner, Border, Interior };
const char* to_string(CaseTag tag);

struct StaircaseResult {
  std::vector<Term> generators;          // G(I) within the box, graded deglex order
  std::vector<Polynomial> reduced_basis; // t - Can(t) for each generator, same order
  std::size_t queries_used = 0;
  Exponent bound = 0;
};

enum class SearchMode { Linear, Binary };

struct StaircaseOptions {
  /// Linear is the query-faithful default. Binary only changes how the
  /// lowest member of a row or column is located.
  SearchMode search = SearchMode::Linear;
};

ProbeOutcome diagonal_probe(CanOracle& o, std::size_t nvars, Exponent D);

/// Throws MathError when t is not in T(I).
CaseTag classify(CanOracle& o, const Term& t);

/// G(I) within B(D) for a two-variable oracle.
std::vector<Term> reconstruct_2var(CanOracle& o, Exponent D, const StaircaseOptions& opts = {});

StaircaseResult reconstruct(CanOracle& o, std::size_t nvars, Exponent D, const StaircaseOptions& opts = {});

/// Baseline: queries every term of B(D) and keeps the minimal members.
std::vector<Term> brute_force_generators(CanOracle& o, std::size_t nvars, Exponent D);
/// Same answer and query count as brute_force_generators; the box scan is
/// split across OpenMP threads when available.
std::vector<Term> brute_force_generators_parallel(CanOracle& o, std::size_t nvars, Exponent D);

/// Minimal generators (by divisibility) of the members of a term set.
std::vector<Term> minimal_elements(std::vector<Term> terms);

/// The staircase walk on an abstract upward-closed set S in k variables,
/// given by its membership predicate. Returns G(S) within B(D).
using MembershipProbe = std::function<bool(const Term&)>;
std::vector<Term> staircase_generators(const MembershipProbe& in_S, std::size_t k, Exponent D,
                                       const StaircaseOptions& opts = {});

}  // namespace escalier
