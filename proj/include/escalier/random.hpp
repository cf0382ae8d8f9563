#pragma once

#include <cstdint>
#include <random>

#include "escalier/polynomial.hpp"

namespace escalier {

using Rng = std::mt19937_64;

/// Up to `max_terms` random terms of total degree <= max_degree with random
/// nonzero coefficients (colliding terms merge, so fewer may remain).
Polynomial random_polynomial(Rng& rng, std::size_t nvars, const PrimeField& field, std::uint64_t max_degree,
                             std::size_t max_terms);

Term random_term_of_degree_at_most(Rng& rng, std::size_t nvars, std::uint64_t max_degree);

Word random_word(Rng& rng, std::size_t nvars, std::size_t min_len, std::size_t max_len);
NcPolynomial random_nc_polynomial(Rng& rng, std::size_t nvars, const PrimeField& field, std::size_t max_len,
                                  std::size_t max_terms);

}  // namespace escalier
