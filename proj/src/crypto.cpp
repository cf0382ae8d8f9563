#include "escalier/crypto.hpp"

#include <algorithm>
#include <set>

namespace escalier {

namespace {

bool in_ideal(const Polynomial& f, const std::vector<Polynomial>& basis, const TermOrder& order) {
  return normal_form(f, basis, order).is_zero();
}

Polynomial noise(const PublicKey& pub, Rng& rng, std::size_t max_terms) {
  Polynomial out(pub.nvars, pub.field);
  for (const auto& g : pub.G) out += random_polynomial(rng, pub.nvars, pub.field, pub.eth, max_terms) * g;
  return out;
}

}  // namespace

KeyPair keygen(const std::vector<Polynomial>& generators, const TermOrder& order, const KeygenParams& params, Rng& rng,
               const std::vector<Polynomial>& public_sources) {
  if (generators.empty()) throw MathError("keygen needs generators");
  const std::size_t n = order.nvars();
  const PrimeField field = generators.front().field();
  auto basis = buchberger(generators, order);
  auto leads = leading_terms(basis, order);
  if (std::any_of(leads.begin(), leads.end(), [](const Term& t) { return t.is_one(); }))
    throw MathError("keygen: the generators span the unit ideal");

  const auto& sources = public_sources.empty() ? basis : public_sources;
  for (const auto& s : sources)
    if (!in_ideal(s, basis, order)) throw MathError("keygen: a public source is not in the ideal");

  PublicKey pub;
  pub.nvars = n;
  pub.field = field;
  pub.eth = params.eth;
  for (std::size_t j = 0; j < params.l; ++j) {
    Polynomial g(n, field);
    for (int attempt = 0; attempt < 64 && g.is_zero(); ++attempt)
      for (const auto& s : sources) g += random_polynomial(rng, n, field, params.eth, params.max_terms) * s;
    if (g.is_zero()) throw MathError("keygen: could not draw a nonzero public polynomial");
    pub.G.push_back(std::move(g));
  }

  std::uint64_t cap = 0;
  for (const auto& g : pub.G) cap = std::max(cap, g.degree() + params.eth);

  std::vector<Term> normal;
  for (std::uint64_t d = 0; d <= cap; ++d)
    for (auto& t : terms_of_degree(n, d))
      if (std::none_of(leads.begin(), leads.end(), [&](const Term& l) { return divides(l, t); })) normal.push_back(t);
  if (normal.size() < params.m)
    throw MathError("keygen: only " + std::to_string(normal.size()) + " normal terms of degree <= " +
                    std::to_string(cap) + ", need " + std::to_string(params.m));
  std::sort(normal.begin(), normal.end(), [&](const Term& a, const Term& b) { return order.less(a, b); });
  pub.T.assign(normal.begin(), normal.begin() + static_cast<std::ptrdiff_t>(params.m));

  pub.delta = cap;
  for (const auto& t : pub.T) pub.delta = std::max(pub.delta, t.degree());
  return {PrivateKey{order, std::move(basis)}, std::move(pub)};
}

Polynomial encrypt(const PublicKey& pub, const Polynomial& M, Rng& rng, std::size_t max_terms) {
  std::set<Term> allowed(pub.T.begin(), pub.T.end());
  for (const auto& [t, c] : M.terms())
    if (!allowed.count(t)) throw MathError("encrypt: message term " + to_string(t) + " is not in T");
  return M + noise(pub, rng, max_terms);
}

Polynomial decrypt(CanOracle& o, const Polynomial& C) { return o.can_poly(C); }

Polynomial bulygin_recover_generator(CanOracle& o, const PublicKey& pub, const Term& lead, Rng& rng,
                                     const BulyginOptions& opts) {
  if (!o.member_T(lead)) throw MathError("bulygin: " + to_string(lead) + " is a normal term");
  const auto t = Polynomial::monomial(lead, 1, pub.field);
  Polynomial decrypted(pub.nvars, pub.field);
  if (opts.mask_parts <= 1) {
    decrypted = decrypt(o, t + noise(pub, rng, 3));
  } else {
    Polynomial rest = Polynomial::constant(pub.nvars, 1, pub.field);
    for (std::size_t i = 0; i < opts.mask_parts; ++i) {
      Polynomial l = i + 1 == opts.mask_parts ? rest : random_polynomial(rng, pub.nvars, pub.field, 1, 2);
      rest -= l;
      decrypted += decrypt(o, l * t + noise(pub, rng, 3));
    }
  }
  return t - decrypted;
}

Decryptor::Decryptor(std::vector<ReductionRule> rules, std::size_t nvars)
    : rules_(std::move(rules)), traversal_(OrderKind::DegLex, nvars) {}

Polynomial Decryptor::operator()(const Polynomial& C) const { return reduce_by_rules(C, rules_, traversal_); }

AttackResult attack_commutative(CanOracle& o, const PublicKey& pub, Exponent D) {
  const Exponent bound = D ? D : static_cast<Exponent>(pub.delta);
  auto recon = reconstruct(o, pub.nvars, bound);
  std::vector<ReductionRule> rules;
  for (std::size_t i = 0; i < recon.generators.size(); ++i) rules.push_back({recon.generators[i], recon.reduced_basis[i]});
  return {std::move(recon), Decryptor(std::move(rules), pub.nvars)};
}

NcProbeReport nc_attack_probe(NcCanOracle& o, const std::vector<NcPolynomial>& G, std::size_t trials, Rng& rng) {
  NcProbeReport rep;
  const std::size_t before = o.query_count();
  auto p1 = solve_problem1(o, G);
  rep.h_size = p1.H.size();
  std::vector<NcRule> rules;
  for (std::size_t i = 0; i < p1.H.size(); ++i) rules.push_back({p1.leads[i], p1.H[i]});
  const WordOrder traversal(o.nvars());
  const std::size_t n = o.nvars();
  const PrimeField& k = o.field();
  std::uniform_int_distribution<Coeff> coeff(1, k.prime() - 1);

  for (std::size_t t = 0; t < trials; ++t) {
    NcPolynomial M(n, k);
    for (int i = 0; i < 3; ++i) {
      Word w = random_word(rng, n, 0, 3);
      if (!o.member_T(w)) M.add_term(w, coeff(rng));
    }
    NcPolynomial C = M;
    for (const auto& g : G)
      for (int i = 0; i < 2; ++i) C += g.times(coeff(rng), random_word(rng, n, 0, 2), random_word(rng, n, 0, 2));
    ++rep.trials;
    if (nc_reduce(C, rules, traversal) == M)
      ++rep.successes;
    else
      ++rep.failures;
  }
  rep.queries_used = o.query_count() - before;
  return rep;
}

}  // namespace escalier
