#include "escalier/random.hpp"

namespace escalier {

Term random_term_of_degree_at_most(Rng& rng, std::size_t nvars, std::uint64_t max_degree) {
  std::vector<Exponent> e(nvars, 0);
  const auto d = std::uniform_int_distribution<std::uint64_t>(0, max_degree)(rng);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  for (std::uint64_t i = 0; i < d; ++i) ++e[var(rng)];
  return Term(std::move(e));
}

Polynomial random_polynomial(Rng& rng, std::size_t nvars, const PrimeField& field, std::uint64_t max_degree,
                             std::size_t max_terms) {
  Polynomial p(nvars, field);
  std::uniform_int_distribution<Coeff> coeff(1, field.prime() - 1);
  for (std::size_t i = 0; i < max_terms; ++i) p.add_term(random_term_of_degree_at_most(rng, nvars, max_degree), coeff(rng));
  return p;
}

Word random_word(Rng& rng, std::size_t nvars, std::size_t min_len, std::size_t max_len) {
  std::vector<Letter> v(std::uniform_int_distribution<std::size_t>(min_len, max_len)(rng));
  std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(nvars - 1));
  for (auto& x : v) x = letter(rng);
  return Word(nvars, std::move(v));
}

NcPolynomial random_nc_polynomial(Rng& rng, std::size_t nvars, const PrimeField& field, std::size_t max_len,
                                  std::size_t max_terms) {
  NcPolynomial p(nvars, field);
  std::uniform_int_distribution<Coeff> coeff(1, field.prime() - 1);
  for (std::size_t i = 0; i < max_terms; ++i) p.add_term(random_word(rng, nvars, 0, max_len), coeff(rng));
  return p;
}

}  // namespace escalier
