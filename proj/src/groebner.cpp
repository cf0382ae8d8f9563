#include "escalier/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace escalier {

LeadingData leading_data(const Polynomial& f, const TermOrder& order) {
  if (f.is_zero()) throw MathError("leading term of the zero polynomial");
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

Term leading_term(const Polynomial& f, const TermOrder& order) { return leading_data(f, order).term; }

Polynomial make_monic(const Polynomial& f, const TermOrder& order) {
  return f.scaled(f.field().inv(leading_data(f, order).coeff));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
  f.check_compatible(g);
  auto [tf, cf] = leading_data(f, order);
  auto [tg, cg] = leading_data(g, order);
  const PrimeField& k = f.field();
  Term d = lcm(tf, tg);
  return g.times(k.inv(cg), d / tg) - f.times(k.inv(cf), d / tf);
}

Polynomial reduce_by_rules(const Polynomial& f, const std::vector<ReductionRule>& rules,
                           const TermOrder& traversal) {
  const PrimeField& k = f.field();
  std::map<Term, Coeff, OrderGreater> work(OrderGreater{&traversal});
  for (const auto& [t, c] : f.terms()) work.emplace(t, c);
  Polynomial rem(f.nvars(), k);

  auto accumulate = [&](const Term& t, Coeff c) {
    auto [it, inserted] = work.try_emplace(t, c);
    if (!inserted) {
      it->second = k.add(it->second, c);
      if (it->second == 0) work.erase(it);
    }
  };

  while (!work.empty()) {
    auto top = work.begin();
    Term t = top->first;
    Coeff c = top->second;
    const ReductionRule* rule = nullptr;
    for (const auto& r : rules)
      if (divides(r.lead, t)) {
        rule = &r;
        break;
      }
    if (!rule) {
      rem.add_term(t, c);
      work.erase(top);
      continue;
    }
    Term q = t / rule->lead;
    Coeff minus_c = k.neg(c);
    for (const auto& [m, a] : rule->poly.terms()) accumulate(q * m, k.mul(minus_c, a));
  }
  return rem;
}

namespace {

std::vector<ReductionRule> rules_for(const std::vector<Polynomial>& G, const TermOrder& order) {
  std::vector<std::pair<std::size_t, ReductionRule>> indexed;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].is_zero()) continue;
    Polynomial m = make_monic(G[i], order);
    indexed.push_back({i, {leading_term(m, order), std::move(m)}});
  }
  std::stable_sort(indexed.begin(), indexed.end(),
                   [&](const auto& a, const auto& b) { return order.less(a.second.lead, b.second.lead); });
  std::vector<ReductionRule> rules;
  rules.reserve(indexed.size());
  for (auto& [i, r] : indexed) rules.push_back(std::move(r));
  return rules;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G, const TermOrder& order) {
  return reduce_by_rules(f, rules_for(G, order), order);
}

std::vector<Polynomial> reduce_basis(const std::vector<Polynomial>& G, const TermOrder& order) {
  std::vector<Polynomial> monic;
  for (const auto& g : G)
    if (!g.is_zero()) monic.push_back(make_monic(g, order));
  std::stable_sort(monic.begin(), monic.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(leading_term(a, order), leading_term(b, order));
  });
  // Minimalize: keep an element only if no kept lead divides its lead.
  std::vector<Polynomial> minimal;
  std::vector<Term> leads;
  for (auto& g : monic) {
    Term t = leading_term(g, order);
    if (std::any_of(leads.begin(), leads.end(), [&](const Term& l) { return divides(l, t); })) continue;
    leads.push_back(t);
    minimal.push_back(std::move(g));
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(normal_form(minimal[i], others, order));
  }
  return reduced;
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& F, const TermOrder& order,
                                   BuchbergerStats* stats) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  std::vector<Polynomial> G;
  std::vector<Term> leads;
  for (const auto& f : F) {
    if (f.is_zero()) continue;
    G.push_back(make_monic(f, order));
    leads.push_back(leading_term(G.back(), order));
  }
  if (G.empty()) throw MathError("buchberger needs at least one nonzero generator");

  using Pair = std::pair<std::size_t, std::size_t>;
  std::set<Pair> pending;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

  auto pair_lcm = [&](const Pair& p) { return lcm(leads[p.first], leads[p.second]); };
  auto key = [](std::size_t a, std::size_t b) { return a < b ? Pair{a, b} : Pair{b, a}; };

  while (!pending.empty()) {
    // normal strategy: smallest lcm first, ties by index
    auto best = pending.begin();
    Term best_lcm = pair_lcm(*best);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Term l = pair_lcm(*it);
      if (order.less(l, best_lcm)) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    Pair p = *best;
    pending.erase(best);
    ++st.pairs_considered;

    if (gcd(leads[p.first], leads[p.second]).is_one()) {
      ++st.pairs_skipped_coprime;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == p.first || k == p.second) continue;
      if (divides(leads[k], best_lcm) && !pending.count(key(p.first, k)) && !pending.count(key(p.second, k)))
        chain = true;
    }
    if (chain) {
      ++st.pairs_skipped_chain;
      continue;
    }

    Polynomial r = normal_form(s_polynomial(G[p.first], G[p.second], order), G, order);
    if (r.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    r = make_monic(r, order);
    std::size_t m = G.size();
    leads.push_back(leading_term(r, order));
    G.push_back(std::move(r));
    for (std::size_t i = 0; i < m; ++i) pending.insert({i, m});
  }
  return reduce_basis(G, order);
}

std::vector<SPairCheck> check_s_pairs(const std::vector<Polynomial>& G, const TermOrder& order) {
  std::vector<SPairCheck> out;
  for (std::size_t j = 0; j < G.size(); ++j) {
    if (G[j].is_zero()) continue;
    for (std::size_t i = 0; i < j; ++i) {
      if (G[i].is_zero()) continue;
      out.push_back({i, j, normal_form(s_polynomial(G[i], G[j], order), G, order)});
    }
  }
  return out;
}

bool is_groebner(const std::vector<Polynomial>& G, const TermOrder& order) {
  for (std::size_t j = 0; j < G.size(); ++j) {
    if (G[j].is_zero()) continue;
    for (std::size_t i = 0; i < j; ++i) {
      if (G[i].is_zero()) continue;
      if (!normal_form(s_polynomial(G[i], G[j], order), G, order).is_zero()) return false;
    }
  }
  return true;
}

std::uint64_t gb_degree(const std::vector<Polynomial>& G) {
  std::uint64_t d = 0;
  for (const auto& g : G) d = std::max(d, g.degree());
  return d;
}

std::uint64_t lead_degree(const std::vector<Polynomial>& G, const TermOrder& order) {
  std::uint64_t d = 0;
  for (const auto& g : G)
    if (!g.is_zero()) d = std::max(d, leading_term(g, order).degree());
  return d;
}

std::vector<Term> leading_terms(const std::vector<Polynomial>& G, const TermOrder& order) {
  std::vector<Term> out;
  for (const auto& g : G)
    if (!g.is_zero()) out.push_back(leading_term(g, order));
  return out;
}

}  // namespace escalier
