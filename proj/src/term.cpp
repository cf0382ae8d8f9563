#include "escalier/term.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "escalier/error.hpp"
#include "text_scan.hpp"

namespace escalier {

namespace {

void require_same_n(const Term& a, const Term& b) {
  if (a.nvars() != b.nvars())
    throw MathError("term dimension mismatch: " + std::to_string(a.nvars()) + " vs " +
                    std::to_string(b.nvars()));
}

}  // namespace

Term Term::variable(std::size_t nvars, std::size_t var, Exponent power) {
  if (var >= nvars) throw MathError("variable index out of range");
  Term t(nvars);
  t.exps_[var] = power;
  return t;
}

std::uint64_t Term::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Term::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

Term operator*(const Term& a, const Term& b) {
  require_same_n(a, b);
  Term r(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a[i] > std::numeric_limits<Exponent>::max() - b[i]) throw MathError("exponent overflow");
    r[i] = a[i] + b[i];
  }
  return r;
}

Term operator/(const Term& a, const Term& b) {
  if (!divides(b, a)) throw MathError("inexact term division " + to_string(a) + " / " + to_string(b));
  Term r(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool divides(const Term& a, const Term& b) {
  require_same_n(a, b);
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Term lcm(const Term& a, const Term& b) {
  require_same_n(a, b);
  Term r(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Term gcd(const Term& a, const Term& b) {
  require_same_n(a, b);
  Term r(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

std::optional<Term> predecessor(const Term& t, std::size_t var) {
  if (var >= t.nvars()) throw MathError("predecessor index out of range");
  if (t[var] == 0) return std::nullopt;
  Term p = t;
  --p[var];
  return p;
}

std::string_view to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::DegLex: return "deglex";
    case OrderKind::DegRevLex: return "degrevlex";
  }
  return "?";
}

OrderKind parse_order_kind(std::string_view s) {
  if (s == "lex") return OrderKind::Lex;
  if (s == "deglex") return OrderKind::DegLex;
  if (s == "degrevlex") return OrderKind::DegRevLex;
  throw ParseError("unknown term order '" + std::string(s) + "' (expected lex|deglex|degrevlex)");
}

TermOrder::TermOrder(OrderKind kind, std::size_t nvars) : kind_(kind), precedence_(nvars) {
  if (nvars == 0) throw MathError("a term order needs at least one variable");
  std::iota(precedence_.begin(), precedence_.end(), std::size_t{0});
}

TermOrder::TermOrder(OrderKind kind, std::vector<std::size_t> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
  std::vector<std::size_t> sorted = precedence_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw MathError("variable precedence is not a permutation");
  if (precedence_.empty()) throw MathError("a term order needs at least one variable");
}

std::strong_ordering TermOrder::compare(const Term& a, const Term& b) const {
  if (a.nvars() != nvars() || b.nvars() != nvars())
    throw MathError("term order on " + std::to_string(nvars()) + " variables applied to terms of size " +
                    std::to_string(a.nvars()) + "/" + std::to_string(b.nvars()));
  if (kind_ != OrderKind::Lex) {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
  }
  if (kind_ == OrderKind::DegRevLex) {
    // Smallest variable first; a larger exponent there makes the term smaller.
    for (std::size_t v : precedence_)
      if (a[v] != b[v]) return b[v] <=> a[v];
    return std::strong_ordering::equal;
  }
  for (auto it = precedence_.rbegin(); it != precedence_.rend(); ++it)
    if (a[*it] != b[*it]) return a[*it] <=> b[*it];
  return std::strong_ordering::equal;
}

std::uint64_t Box::size() const {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < nvars; ++i) s *= std::uint64_t{bound} + 1;
  return s;
}

bool Box::contains(const Term& t) const {
  if (t.nvars() != nvars) return false;
  for (std::size_t i = 0; i < nvars; ++i)
    if (t[i] > bound) return false;
  return true;
}

std::vector<Term> box_enumerate(const Box& box) {
  return box_enumerate(box, TermOrder(OrderKind::DegLex, box.nvars));
}

std::vector<Term> box_enumerate(const Box& box, const TermOrder& order) {
  std::vector<Term> out;
  out.reserve(box.size());
  Term t(box.nvars);
  // odometer over [0, bound]^n
  while (true) {
    out.push_back(t);
    std::size_t i = 0;
    while (i < box.nvars && t[i] == box.bound) t[i++] = 0;
    if (i == box.nvars) break;
    ++t[i];
  }
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return order.less(a, b);
  });
  return out;
}

std::vector<Term> terms_of_degree(std::size_t nvars, std::uint64_t d) {
  std::vector<Term> out;
  Term t(nvars);
  // distribute d over the variables recursively
  auto rec = [&](auto&& self, std::size_t var, std::uint64_t left) -> void {
    if (var + 1 == nvars) {
      t[var] = static_cast<Exponent>(left);
      out.push_back(t);
      return;
    }
    for (std::uint64_t e = 0; e <= left; ++e) {
      t[var] = static_cast<Exponent>(e);
      self(self, var + 1, left - e);
    }
  };
  if (nvars > 0) rec(rec, 0, d);
  return out;
}

std::string to_string(const Term& t) {
  std::string s;
  for (std::size_t i = 0; i < t.nvars(); ++i) {
    if (t[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'X' + std::to_string(i + 1);
    if (t[i] > 1) s += '^' + std::to_string(t[i]);
  }
  return s.empty() ? "1" : s;
}

namespace detail {

// Shared with the polynomial parser: reads factor ('*' factor)* into `t`.
void parse_term_factors(Scanner& sc, Term& t) {
  do {
    std::size_t v = sc.variable(t.nvars());
    std::uint64_t e = 1;
    if (sc.accept('^')) e = sc.number();
    if (std::uint64_t{t[v]} + e > std::numeric_limits<Exponent>::max()) sc.fail("exponent overflow");
    t[v] += static_cast<Exponent>(e);
  } while (sc.accept('*'));
}

}  // namespace detail

Term parse_term(std::string_view text, std::size_t nvars) {
  detail::Scanner sc(text);
  Term t(nvars);
  if (sc.peek() == '1') {
    if (sc.number() != 1) sc.fail("only the constant term 1 is allowed");
  } else {
    detail::parse_term_factors(sc, t);
  }
  if (!sc.done()) sc.fail("trailing characters");
  return t;
}

}  // namespace escalier
