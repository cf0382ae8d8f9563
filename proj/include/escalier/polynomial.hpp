#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "escalier/error.hpp"
#include "escalier/field.hpp"
#include "escalier/term.hpp"
#include "escalier/word.hpp"

namespace escalier {

inline std::uint64_t total_degree(const Term& t) { return t.degree(); }
inline std::uint64_t total_degree(const Word& w) { return w.size(); }

/// Sparse polynomial over a prime field: a map from monomial to nonzero
/// coefficient. `Mono` is Term (commutative ring) or Word (free algebra).
template <class Mono>
class SparsePoly {
 public:
  using Map = std::map<Mono, Coeff>;

  SparsePoly(std::size_t nvars, PrimeField field) : nvars_(nvars), field_(field) {}

  static SparsePoly monomial(const Mono& m, Coeff c, PrimeField field) {
    SparsePoly p(m.nvars(), field);
    p.add_term(m, c);
    return p;
  }
  static SparsePoly constant(std::size_t nvars, Coeff c, PrimeField field) {
    return monomial(Mono(nvars), c, field);
  }

  std::size_t nvars() const { return nvars_; }
  const PrimeField& field() const { return field_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
  }

  std::vector<Mono> support() const {
    std::vector<Mono> s;
    s.reserve(terms_.size());
    for (const auto& [m, c] : terms_) s.push_back(m);
    return s;
  }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
  }

  /// Adds c*m, dropping the entry if it cancels.
  void add_term(const Mono& m, Coeff c) {
    if (m.nvars() != nvars_) throw MathError("monomial does not belong to this ring");
    c = c % field_.prime();
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = field_.add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, field_.neg(c));
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  SparsePoly operator-() const { return scaled(field_.neg(1)); }

  SparsePoly scaled(Coeff c) const {
    SparsePoly r(nvars_, field_);
    if (c % field_.prime() == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, field_.mul(k, c));
    return r;
  }

  /// c * left * this * right (for commutative terms the sides coincide).
  SparsePoly times(Coeff c, const Mono& left, const Mono& right) const {
    SparsePoly r(nvars_, field_);
    if (c % field_.prime() == 0) return r;
    for (const auto& [m, k] : terms_) r.add_term(left * m * right, field_.mul(k, c));
    return r;
  }
  SparsePoly times(Coeff c, const Mono& left) const { return times(c, left, Mono(nvars_)); }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check_compatible(b);
    SparsePoly r(a.nvars_, a.field_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, a.field_.mul(ca, cb));
    return r;
  }

  bool operator==(const SparsePoly& o) const {
    return nvars_ == o.nvars_ && field_ == o.field_ && terms_ == o.terms_;
  }

  void check_compatible(const SparsePoly& o) const {
    if (nvars_ != o.nvars_ || !(field_ == o.field_)) throw MathError("polynomials live in different rings");
  }

 private:
  std::size_t nvars_;
  PrimeField field_;
  Map terms_;
};

using Polynomial = SparsePoly<Term>;
using NcPolynomial = SparsePoly<Word>;

/// Renders `c*X1^a*X2^b + ...` with terms in decreasing `order`, unit
/// coefficients omitted and all coefficients as residues in [0, p).
std::string to_string(const Polynomial& f, const TermOrder& order);
std::string to_string(const NcPolynomial& f, const WordOrder& order);

/// Accepts sums/differences of `[c*]term` with integer coefficients
/// (reduced mod p) and optional whitespace; `0` is the zero polynomial.
Polynomial parse_polynomial(std::string_view text, std::size_t nvars, PrimeField field);
NcPolynomial parse_nc_polynomial(std::string_view text, std::size_t nvars, PrimeField field);

}  // namespace escalier
