#include "escalier/polynomial.hpp"

#include <algorithm>

#include "text_scan.hpp"

namespace escalier {

namespace detail {
void parse_term_factors(Scanner& sc, Term& t);
void parse_word_factors(Scanner& sc, std::vector<Letter>& letters, std::size_t nvars);
}  // namespace detail

namespace {

template <class Mono, class Greater>
std::string render(const SparsePoly<Mono>& f, Greater greater) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Mono, Coeff>> items(f.terms().begin(), f.terms().end());
  std::sort(items.begin(), items.end(), [&](const auto& a, const auto& b) { return greater(a.first, b.first); });
  std::string s;
  for (const auto& [m, c] : items) {
    if (!s.empty()) s += " + ";
    std::string ms = to_string(m);
    if (ms == "1")
      s += std::to_string(c);
    else if (c == 1)
      s += ms;
    else
      s += std::to_string(c) + "*" + ms;
  }
  return s;
}

// Reads one signed monomial; `read_mono` consumes the factor list.
template <class Poly, class ReadMono>
Poly parse_sum(std::string_view text, std::size_t nvars, PrimeField field, ReadMono read_mono) {
  detail::Scanner sc(text);
  Poly f(nvars, field);
  if (sc.done()) sc.fail("empty polynomial");
  bool first = true;
  while (!sc.done()) {
    bool negative = false;
    if (sc.accept('+')) {
    } else if (sc.accept('-')) {
      negative = true;
    } else if (!first) {
      sc.fail("expected '+' or '-'");
    }
    first = false;
    Coeff c = 1;
    bool have_coeff = false;
    if (sc.at_digit()) {
      c = field.reduce(static_cast<std::int64_t>(sc.number()));
      have_coeff = true;
    }
    auto mono = typename Poly::Map::key_type(nvars);
    if (!have_coeff || sc.accept('*')) read_mono(sc, mono);
    f.add_term(mono, negative ? field.neg(c) : c);
  }
  return f;
}

}  // namespace

std::string to_string(const Polynomial& f, const TermOrder& order) {
  return render(f, OrderGreater{&order});
}

std::string to_string(const NcPolynomial& f, const WordOrder& order) {
  return render(f, WordGreater{&order});
}

Polynomial parse_polynomial(std::string_view text, std::size_t nvars, PrimeField field) {
  return parse_sum<Polynomial>(text, nvars, field, [](detail::Scanner& sc, Term& t) { detail::parse_term_factors(sc, t); });
}

NcPolynomial parse_nc_polynomial(std::string_view text, std::size_t nvars, PrimeField field) {
  return parse_sum<NcPolynomial>(text, nvars, field, [nvars](detail::Scanner& sc, Word& w) {
    std::vector<Letter> letters;
    detail::parse_word_factors(sc, letters, nvars);
    w = Word(nvars, std::move(letters));
  });
}

}  // namespace escalier
