#include "escalier/nc_groebner.hpp"

#include <algorithm>
#include <map>

namespace escalier {

NcLeadingData nc_leading_data(const NcPolynomial& f, const WordOrder& order) {
  if (f.is_zero()) throw MathError("leading word of the zero polynomial");
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

Word nc_leading_word(const NcPolynomial& f, const WordOrder& order) { return nc_leading_data(f, order).word; }

NcPolynomial nc_make_monic(const NcPolynomial& f, const WordOrder& order) {
  return f.scaled(f.field().inv(nc_leading_data(f, order).coeff));
}

NcPolynomial nc_reduce(const NcPolynomial& f, const std::vector<NcRule>& rules, const WordOrder& traversal) {
  const PrimeField& k = f.field();
  std::map<Word, Coeff, WordGreater> work(WordGreater{&traversal});
  for (const auto& [w, c] : f.terms()) work.emplace(w, c);
  NcPolynomial rem(f.nvars(), k);

  while (!work.empty()) {
    auto top = work.begin();
    Word w = top->first;
    Coeff c = top->second;

    const NcRule* rule = nullptr;
    std::size_t at = 0;
    for (std::size_t pos = 0; pos <= w.size(); ++pos) {
      for (const auto& r : rules) {
        if (r.lead.size() + pos > w.size()) continue;
        if (!std::equal(r.lead.letters().begin(), r.lead.letters().end(),
                        w.letters().begin() + static_cast<std::ptrdiff_t>(pos)))
          continue;
        if (!rule || r.lead.size() > rule->lead.size()) rule = &r;
      }
      if (rule) {
        at = pos;
        break;
      }
    }
    if (!rule) {
      rem.add_term(w, c);
      work.erase(top);
      continue;
    }
    Word left = w.sub(0, at);
    Word right = w.sub(at + rule->lead.size(), w.size() - at - rule->lead.size());
    Coeff minus_c = k.neg(c);
    for (const auto& [m, a] : rule->poly.terms()) {
      Word nw = concat(left, m, right);
      Coeff add = k.mul(minus_c, a);
      auto [it, inserted] = work.try_emplace(nw, add);
      if (!inserted) {
        it->second = k.add(it->second, add);
        if (it->second == 0) work.erase(it);
      }
    }
  }
  return rem;
}

std::vector<NcRule> nc_rules(const std::vector<NcPolynomial>& G, const WordOrder& order) {
  std::vector<NcRule> rules;
  for (const auto& g : G) {
    if (g.is_zero()) continue;
    NcPolynomial m = nc_make_monic(g, order);
    rules.push_back({nc_leading_word(m, order), std::move(m)});
  }
  return rules;
}

NcPolynomial nc_normal_form(const NcPolynomial& f, const std::vector<NcPolynomial>& G, const WordOrder& order) {
  return nc_reduce(f, nc_rules(G, order), order);
}

std::vector<Ambiguity> nc_ambiguities(const std::vector<NcPolynomial>& G, const WordOrder& order,
                                      std::size_t length_bound) {
  std::vector<Word> leads;
  for (const auto& g : G) {
    if (g.is_zero()) throw MathError("ambiguity check on a zero element");
    auto [w, c] = nc_leading_data(g, order);
    if (c != 1) throw MathError("ambiguity check needs monic elements; " + to_string(w) + " has coefficient " + std::to_string(c));
    leads.push_back(w);
  }
  auto rules = nc_rules(G, order);
  std::vector<Ambiguity> out;
  const std::size_t n = G.empty() ? 0 : G.front().nvars();
  const Word one(n);

  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = 0; j < G.size(); ++j) {
      const Word& u = leads[i];
      const Word& v = leads[j];
      // overlaps: a proper suffix of u equals a proper prefix of v
      for (std::size_t k = 1; k < u.size() && k < v.size(); ++k) {
        if (!std::equal(u.letters().end() - static_cast<std::ptrdiff_t>(k), u.letters().end(), v.letters().begin()))
          continue;
        Word amb = concat(u, v.sub(k, v.size() - k), one);
        if (amb.size() > length_bound) continue;
        NcPolynomial s = G[i].times(1, one, v.sub(k, v.size() - k)) - G[j].times(1, u.sub(0, u.size() - k), one);
        out.push_back({i, j, amb, nc_reduce(s, rules, order)});
      }
      // inclusions: v is a factor of u
      if (i != j && v.size() <= u.size()) {
        for (std::size_t pos : occurrence_positions(v, u)) {
          if (u.size() > length_bound) continue;
          NcPolynomial s = G[i] - G[j].times(1, u.sub(0, pos), u.sub(pos + v.size(), u.size() - pos - v.size()));
          out.push_back({i, j, u, nc_reduce(s, rules, order)});
        }
      }
    }
  }
  return out;
}

bool overlap_check(const std::vector<NcPolynomial>& G, const WordOrder& order, std::size_t length_bound) {
  auto ambs = nc_ambiguities(G, order, length_bound);
  return std::all_of(ambs.begin(), ambs.end(), [](const Ambiguity& a) { return a.residue.is_zero(); });
}

}  // namespace escalier
