#include "escalier/oracle.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace escalier {

Polynomial CanOracle::can_term(const Term& t) {
  if (t.nvars() != nvars())
    throw MathError("oracle query " + to_string(t) + " is not a term in " + std::to_string(nvars()) + " variables");
  count_.fetch_add(1);
  if (logging_) {
    std::lock_guard lock(log_mu_);
    log_.push_back(to_string(t));
  }
  return answer(t);
}

bool CanOracle::member_T(const Term& t) {
  Polynomial c = can_term(t);
  return !(c == Polynomial::monomial(t, 1, field()));
}

Polynomial CanOracle::can_poly(const Polynomial& f) {
  Polynomial out(nvars(), field());
  for (const auto& [t, c] : f.terms()) out += can_term(t).scaled(c);
  return out;
}

Polynomial CanOracle::masked_can(const Term& t, const std::vector<std::pair<Polynomial, Polynomial>>& decomposition) {
  Polynomial total(nvars(), field());
  Polynomial tp = Polynomial::monomial(t, 1, field());
  std::vector<Polynomial> pieces;
  for (const auto& [l, r] : decomposition) {
    pieces.push_back(l * tp * r);
    total += pieces.back();
  }
  if (!(total == tp)) throw MathError("masking decomposition does not sum to " + to_string(t));
  Polynomial out(nvars(), field());
  for (const auto& p : pieces) out += can_poly(p);
  return out;
}

Ledger CanOracle::ledger() const {
  std::lock_guard lock(log_mu_);
  return {count_.load(), log_};
}

GroebnerOracle::GroebnerOracle(const std::vector<Polynomial>& generators, const TermOrder& order)
    : order_(order), field_(generators.empty() ? PrimeField() : generators.front().field()) {
  if (generators.empty()) throw MathError("an oracle needs at least one generator (use 0 for the zero ideal)");
  for (const auto& g : generators)
    if (g.nvars() != order.nvars()) throw MathError("generator ring does not match the term order");
  bool all_zero = true;
  for (const auto& g : generators) all_zero = all_zero && g.is_zero();
  if (!all_zero) basis_ = buchberger(generators, order);
  for (const auto& g : basis_) rules_.push_back({leading_term(g, order_), g});
}

Polynomial GroebnerOracle::answer(const Term& t) const {
  return reduce_by_rules(Polynomial::monomial(t, 1, field_), rules_, order_);
}

NcPolynomial NcCanOracle::can_word(const Word& w) {
  if (w.nvars() != nvars()) throw MathError("oracle query " + to_string(w) + " is over the wrong alphabet");
  count_.fetch_add(1);
  if (logging_) {
    std::lock_guard lock(log_mu_);
    log_.push_back(to_string(w));
  }
  return answer(w);
}

bool NcCanOracle::member_T(const Word& w) {
  return !(can_word(w) == NcPolynomial::monomial(w, 1, field()));
}

NcPolynomial NcCanOracle::can_poly(const NcPolynomial& f) {
  NcPolynomial out(nvars(), field());
  for (const auto& [w, c] : f.terms()) out += can_word(w).scaled(c);
  return out;
}

NcPolynomial NcCanOracle::masked_can(const Word& w,
                                     const std::vector<std::pair<NcPolynomial, NcPolynomial>>& decomposition) {
  NcPolynomial total(nvars(), field());
  NcPolynomial wp = NcPolynomial::monomial(w, 1, field());
  std::vector<NcPolynomial> pieces;
  for (const auto& [l, r] : decomposition) {
    pieces.push_back(l * wp * r);
    total += pieces.back();
  }
  if (!(total == wp)) throw MathError("masking decomposition does not sum to " + to_string(w));
  NcPolynomial out(nvars(), field());
  for (const auto& p : pieces) out += can_poly(p);
  return out;
}

Ledger NcCanOracle::ledger() const {
  std::lock_guard lock(log_mu_);
  return {count_.load(), log_};
}

NcGroebnerOracle::NcGroebnerOracle(const std::vector<NcPolynomial>& basis, const WordOrder& order)
    : order_(order), field_(basis.empty() ? PrimeField() : basis.front().field()) {
  for (const auto& g : basis) {
    if (g.nvars() != order.nvars()) throw MathError("basis alphabet does not match the word order");
    if (!g.is_zero()) basis_.push_back(nc_make_monic(g, order));
  }
  if (!overlap_check(basis_, order_)) throw MathError("NC basis has unresolved ambiguities; it is not a Groebner basis");
  rules_ = nc_rules(basis_, order_);
}

NcPolynomial NcGroebnerOracle::answer(const Word& w) const {
  return nc_reduce(NcPolynomial::monomial(w, 1, field_), rules_, order_);
}

void serve_line_protocol(CanOracle& oracle, const TermOrder& render_order, std::istream& in, std::ostream& out) {
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string cmd;
    ls >> cmd;
    if (cmd.empty()) continue;
    try {
      if (cmd == "CAN") {
        std::string rest;
        std::getline(ls, rest);
        out << to_string(oracle.can_term(parse_term(rest, oracle.nvars())), render_order) << '\n';
      } else if (cmd == "COUNT") {
        out << oracle.query_count() << '\n';
      } else if (cmd == "QUIT") {
        break;
      } else {
        out << "ERR unknown request " << cmd << '\n';
      }
    } catch (const std::exception& e) {
      out << "ERR " << e.what() << '\n';
    }
    out.flush();
  }
}

}  // namespace escalier
