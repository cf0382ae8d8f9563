#pragma once

#include <atomic>
#include <cstddef>
#include <iosfwd>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "escalier/groebner.hpp"
#include "escalier/nc_groebner.hpp"
#include "escalier/polynomial.hpp"

namespace escalier {

/// Snapshot of an oracle's query accounting.
struct Ledger {
  std::size_t count = 0;
  std::vector<std::string> log;  // rendered queried terms, only when logging is on
};

/// Canonical-form black box over F_p[X1..Xn]. This is the only surface the
/// reconstruction code sees: it cannot reach the ideal behind it.
///
/// Every can_term call is one query. Counting is atomic so a single oracle
/// may be queried from several threads (see brute_force_generators_parallel);
/// answer() must therefore be thread-safe in implementations.
class CanOracle {
 public:
  virtual ~CanOracle() = default;
  CanOracle() = default;
  CanOracle(const CanOracle&) = delete;
  CanOracle& operator=(const CanOracle&) = delete;

  virtual std::size_t nvars() const = 0;
  virtual const PrimeField& field() const = 0;

  /// Can(t, I, <). Throws MathError when t is not a term of this ring.
  Polynomial can_term(const Term& t);
  /// t in T(I), i.e. Can(t) != t. One query.
  bool member_T(const Term& t);
  /// Linear extension over the support of f; |supp f| queries.
  Polynomial can_poly(const Polynomial& f);
  /// Sum of Can(l_i * t * r_i) for a decomposition with sum l_i t r_i = t.
  /// Throws MathError when the decomposition does not add up to t.
  Polynomial masked_can(const Term& t, const std::vector<std::pair<Polynomial, Polynomial>>& decomposition);

  Ledger ledger() const;
  std::size_t query_count() const { return count_.load(); }
  void set_logging(bool on) { logging_ = on; }

 protected:
  virtual Polynomial answer(const Term& t) const = 0;

 private:
  std::atomic<std::size_t> count_{0};
  bool logging_ = false;
  mutable std::mutex log_mu_;
  std::vector<std::string> log_;
};

/// Oracle backed by the reduced Groebner basis of the generated ideal, so
/// its answers depend only on (I, <) and not on the presentation.
class GroebnerOracle final : public CanOracle {
 public:
  GroebnerOracle(const std::vector<Polynomial>& generators, const TermOrder& order);

  std::size_t nvars() const override { return order_.nvars(); }
  const PrimeField& field() const override { return field_; }

  // Private side, for the key holder and tests. Reconstruction code takes a
  // CanOracle& and never sees these.
  const std::vector<Polynomial>& private_basis() const { return basis_; }
  const TermOrder& private_order() const { return order_; }

 protected:
  Polynomial answer(const Term& t) const override;

 private:
  TermOrder order_;
  PrimeField field_;
  std::vector<Polynomial> basis_;
  std::vector<ReductionRule> rules_;
};

/// Canonical-form black box over the free algebra F_p<X1..Xn>.
class NcCanOracle {
 public:
  virtual ~NcCanOracle() = default;
  NcCanOracle() = default;
  NcCanOracle(const NcCanOracle&) = delete;
  NcCanOracle& operator=(const NcCanOracle&) = delete;

  virtual std::size_t nvars() const = 0;
  virtual const PrimeField& field() const = 0;

  NcPolynomial can_word(const Word& w);
  bool member_T(const Word& w);
  NcPolynomial can_poly(const NcPolynomial& f);
  NcPolynomial masked_can(const Word& w, const std::vector<std::pair<NcPolynomial, NcPolynomial>>& decomposition);

  Ledger ledger() const;
  std::size_t query_count() const { return count_.load(); }
  void set_logging(bool on) { logging_ = on; }

 protected:
  virtual NcPolynomial answer(const Word& w) const = 0;

 private:
  std::atomic<std::size_t> count_{0};
  bool logging_ = false;
  mutable std::mutex log_mu_;
  std::vector<std::string> log_;
};

/// NC oracle over a finite basis that must pass overlap_check; no completion
/// is attempted. Throws MathError if the basis is not confluent.
class NcGroebnerOracle final : public NcCanOracle {
 public:
  NcGroebnerOracle(const std::vector<NcPolynomial>& basis, const WordOrder& order);

  std::size_t nvars() const override { return order_.nvars(); }
  const PrimeField& field() const override { return field_; }
  const std::vector<NcPolynomial>& private_basis() const { return basis_; }
  const WordOrder& private_order() const { return order_; }

 protected:
  NcPolynomial answer(const Word& w) const override;

 private:
  WordOrder order_;
  PrimeField field_;
  std::vector<NcPolynomial> basis_;
  std::vector<NcRule> rules_;
};

/// Line protocol: `CAN <term>` answers with the canonical form, `COUNT`
/// with the ledger count, `QUIT` ends the session. Errors are reported as
/// `ERR <message>` and do not end the session.
void serve_line_protocol(CanOracle& oracle, const TermOrder& render_order, std::istream& in, std::ostream& out);

}  // namespace escalier
