#pragma once

#include <random>
#include <string_view>
#include <vector>

#include "escalier/polynomial.hpp"

namespace test_support {

inline escalier::Polynomial P(std::string_view s, std::size_t n, escalier::PrimeField f = escalier::PrimeField()) {
  return escalier::parse_polynomial(s, n, f);
}

inline escalier::NcPolynomial NP(std::string_view s, std::size_t n, escalier::PrimeField f = escalier::PrimeField()) {
  return escalier::parse_nc_polynomial(s, n, f);
}

// Random dense-ish polynomials of total degree <= max_deg with `terms` terms.
inline escalier::Polynomial random_poly(std::mt19937_64& rng, std::size_t n, escalier::PrimeField f, unsigned max_deg,
                                        std::size_t terms) {
  escalier::Polynomial p(n, f);
  std::uniform_int_distribution<escalier::Exponent> e(0, max_deg);
  std::uniform_int_distribution<escalier::Coeff> c(1, f.prime() - 1);
  for (std::size_t k = 0; k < terms; ++k) {
    std::vector<escalier::Exponent> v(n, 0);
    unsigned budget = e(rng);
    for (unsigned b = 0; b < budget; ++b) ++v[rng() % n];
    p.add_term(escalier::Term(v), c(rng));
  }
  return p;
}

inline std::vector<escalier::Polynomial> random_ideal(std::mt19937_64& rng, std::size_t n, escalier::PrimeField f,
                                                      std::size_t count, std::size_t terms, unsigned max_deg) {
  std::vector<escalier::Polynomial> F;
  while (F.size() < count) {
    auto p = random_poly(rng, n, f, max_deg, terms);
    if (!p.is_zero()) F.push_back(p);
  }
  return F;
}

}  // namespace test_support
