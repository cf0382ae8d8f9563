#include "escalier/word_recon.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>

namespace escalier {

std::vector<Word> candidate_terms(const NcPolynomial& g) {
  if (g.is_zero()) throw MathError("candidate terms of the zero polynomial");
  auto supp = g.support();
  std::vector<Word> out;
  for (const auto& w : supp) {
    bool maximal = true;
    for (const auto& v : supp)
      if (!(v == w) && is_factor(w, v)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(w);
  }
  std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });
  return out;
}

namespace {

class NcSession {
 public:
  NcSession(NcCanOracle& o, const Problem1Options& opts) : o_(o), opts_(opts), rng_(opts.mask_seed) {}

  const NcPolynomial& can(const Word& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    NcPolynomial c = opts_.masked ? masked(w) : o_.can_word(w);
    return cache_.emplace(w, std::move(c)).first->second;
  }
  bool member(const Word& w) { return !(can(w) == NcPolynomial::monomial(w, 1, o_.field())); }

 private:
  // w = c*w + (1-c)*w with a random scalar c
  NcPolynomial masked(const Word& w) {
    const PrimeField& k = o_.field();
    Coeff c = static_cast<Coeff>(rng_() % k.prime());
    const std::size_t n = o_.nvars();
    auto one = NcPolynomial::constant(n, 1, k);
    return o_.masked_can(w, {{NcPolynomial::constant(n, c, k), one}, {NcPolynomial::constant(n, k.sub(1, c), k), one}});
  }

  NcCanOracle& o_;
  const Problem1Options& opts_;
  std::mt19937_64 rng_;
  std::map<Word, NcPolynomial> cache_;
};

Word peel_with(NcSession& s, const Word& start) {
  if (!s.member(start)) throw MathError("peel: " + to_string(start) + " is not in T(I)");
  if (start.empty()) return start;

  // tau = X_l * omega in T(I); shorten from the left while omega stays in T(I)
  Word tau = start;
  while (!tau.empty()) {
    Word omega = tau.sub(1, tau.size() - 1);
    if (!s.member(omega)) break;
    tau = omega;
  }
  if (tau.size() <= 1) return tau;

  const Word xl = tau.sub(0, 1);
  Word omega = tau.sub(1, tau.size() - 1);  // normal
  // omega = upsilon * X_r; shorten while X_l * upsilon stays in T(I)
  while (!omega.empty()) {
    Word upsilon = omega.sub(0, omega.size() - 1);
    if (!s.member(concat(xl, upsilon, Word(start.nvars())))) break;
    omega = upsilon;
  }
  return concat(xl, omega, Word(start.nvars()));
}

std::size_t total_support(const std::vector<NcPolynomial>& G) {
  std::size_t m = 0;
  for (const auto& g : G) m += g.size();
  return m;
}

}  // namespace

Word peel(NcCanOracle& o, const Word& start) {
  Problem1Options opts;
  NcSession s(o, opts);
  return peel_with(s, start);
}

Problem1Result solve_problem1(NcCanOracle& o, const std::vector<NcPolynomial>& G, const Problem1Options& opts) {
  const std::size_t before = o.query_count();
  NcSession s(o, opts);
  for (const auto& g : G) {
    if (g.nvars() != o.nvars()) throw MathError("public polynomial over the wrong alphabet");
    if (!o.can_poly(g).is_zero()) throw MathError("public set inconsistent with oracle: a polynomial is not in the ideal");
  }

  // The rules carry explicit leads, so reduction does not need the private
  // ordering; the traversal order only fixes the processing sequence.
  const WordOrder traversal(o.nvars());
  Problem1Result res;
  std::vector<NcRule> rules;
  std::vector<NcPolynomial> cur = G;

  for (std::size_t round = 1;; ++round) {
    auto it = std::find_if(cur.begin(), cur.end(), [](const NcPolynomial& g) { return !g.is_zero(); });
    if (it == cur.end()) break;
    if (round > opts.max_rounds) throw MathError("problem 1 did not terminate within the round limit");

    std::optional<Word> start;
    for (const auto& w : candidate_terms(*it))
      if (s.member(w)) {
        start = w;
        break;
      }
    if (!start) {
      auto supp = it->support();
      std::stable_sort(supp.begin(), supp.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });
      for (const auto& w : supp)
        if (s.member(w)) {
          start = w;
          break;
        }
    }
    if (!start) throw MathError("no support word of a nonzero ideal member lies in T(I)");

    Word tau = peel_with(s, *start);
    NcPolynomial h = NcPolynomial::monomial(tau, 1, o.field()) - s.can(tau);
    res.H.push_back(h);
    res.leads.push_back(tau);
    rules.push_back({tau, h});
    for (auto& g : cur) g = nc_reduce(g, rules, traversal);
    res.trace.push_back("round " + std::to_string(round) + ": peeled " + to_string(tau) + ", |G| residual supports " +
                        std::to_string(total_support(cur)));
  }
  res.queries_used = o.query_count() - before;
  return res;
}

}  // namespace escalier
