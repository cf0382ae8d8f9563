#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace escalier {

using Exponent = std::uint32_t;

/// A commutative term X1^a1 * ... * Xn^an stored as its exponent vector.
/// The all-zero vector is the term 1. Variables are indexed from 0 in the
/// API and rendered as X1..Xn.
class Term {
 public:
  Term() = default;
  explicit Term(std::size_t nvars) : exps_(nvars, 0) {}
  Term(std::initializer_list<Exponent> exps) : exps_(exps) {}
  explicit Term(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Term one(std::size_t nvars) { return Term(nvars); }
  static Term variable(std::size_t nvars, std::size_t var, Exponent power = 1);

  std::size_t nvars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;

  /// Structural (not term-order) comparison, used for container keys.
  auto operator<=>(const Term&) const = default;
  bool operator==(const Term&) const = default;

 private:
  std::vector<Exponent> exps_;
};

/// Product of terms; throws MathError on exponent overflow.
Term operator*(const Term& a, const Term& b);
/// Exact quotient a / b; throws MathError unless b divides a.
Term operator/(const Term& a, const Term& b);

bool divides(const Term& a, const Term& b);
Term lcm(const Term& a, const Term& b);
Term gcd(const Term& a, const Term& b);
/// The var-th predecessor t / X_var, or nullopt when X_var does not divide t.
std::optional<Term> predecessor(const Term& t, std::size_t var);

enum class OrderKind { Lex, DegLex, DegRevLex };

std::string_view to_string(OrderKind kind);
/// Accepts "lex", "deglex", "degrevlex".
OrderKind parse_order_kind(std::string_view s);

/// A term ordering on n variables. `precedence` lists variable indices from
/// the smallest to the largest; the default is X1 < X2 < ... < Xn.
class TermOrder {
 public:
  TermOrder(OrderKind kind, std::size_t nvars);
  TermOrder(OrderKind kind, std::vector<std::size_t> precedence);

  OrderKind kind() const { return kind_; }
  std::size_t nvars() const { return precedence_.size(); }
  const std::vector<std::size_t>& precedence() const { return precedence_; }
  bool degree_compatible() const { return kind_ != OrderKind::Lex; }

  /// Throws MathError on dimension mismatch.
  std::strong_ordering compare(const Term& a, const Term& b) const;
  bool less(const Term& a, const Term& b) const { return compare(a, b) < 0; }

 private:
  OrderKind kind_;
  std::vector<std::size_t> precedence_;
};

/// Strict-weak-ordering adaptor, usable as a container comparator.
struct OrderLess {
  const TermOrder* order;
  bool operator()(const Term& a, const Term& b) const { return order->less(a, b); }
};
struct OrderGreater {
  const TermOrder* order;
  bool operator()(const Term& a, const Term& b) const { return order->less(b, a); }
};

/// The box B(D): all terms with every exponent at most D.
struct Box {
  std::size_t nvars;
  Exponent bound;

  std::uint64_t size() const;
  bool contains(const Term& t) const;
};

/// Every term of the box exactly once, sorted by total degree and then by
/// `order` (degree ties broken with deglex when no order is given).
std::vector<Term> box_enumerate(const Box& box);
std::vector<Term> box_enumerate(const Box& box, const TermOrder& order);

/// All terms of total degree exactly d in n variables (unsorted).
std::vector<Term> terms_of_degree(std::size_t nvars, std::uint64_t d);

/// `X1^2*X3`, or `1` for the unit term.
std::string to_string(const Term& t);
/// Parses the rendering above; whitespace is allowed around `*` and `^`.
Term parse_term(std::string_view text, std::size_t nvars);

}  // namespace escalier
