#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "escalier/oracle.hpp"
#include "escalier/random.hpp"
#include "escalier/staircase.hpp"
#include "escalier/word_recon.hpp"

namespace escalier {

struct PrivateKey {
  TermOrder order;
  std::vector<Polynomial> basis;  // reduced Groebner basis
};

struct PublicKey {
  std::size_t nvars = 0;
  PrimeField field;
  std::vector<Polynomial> G;  // ideal members
  std::vector<Term> T;        // normal terms carrying the message
  std::uint64_t eth = 0;      // degree cap of the encryption multipliers
  std::uint64_t delta = 0;    // max(deg t, deg g + eth)
};

struct KeyPair {
  PrivateKey priv;
  PublicKey pub;
};

struct KeygenParams {
  std::size_t l = 2;       // number of public polynomials
  std::uint64_t eth = 1;   // degree cap of the multipliers q_ij and p_j
  std::size_t m = 4;       // number of message terms
  std::size_t max_terms = 3;  // terms per random multiplier
};

/// Private key: the reduced basis of the generated ideal. Public G: random
/// combinations sum_i q_ij * s_i with deg q_ij <= eth, where the s_i are the
/// basis elements unless `public_sources` supplies other ideal members.
/// T: the m smallest normal terms of degree <= max deg g_j + eth.
/// Throws MathError for the unit ideal or when fewer than m such terms exist.
KeyPair keygen(const std::vector<Polynomial>& generators, const TermOrder& order, const KeygenParams& params, Rng& rng,
               const std::vector<Polynomial>& public_sources = {});

/// C = M + sum_j p_j g_j with random p_j of degree <= eth.
/// Throws MathError if M uses a term outside T.
Polynomial encrypt(const PublicKey& pub, const Polynomial& M, Rng& rng, std::size_t max_terms = 3);

Polynomial decrypt(CanOracle& o, const Polynomial& C);

struct BulyginOptions {
  /// Split the fake ciphertext into this many parts l_i * t + noise_i with
  /// random polynomials l_i summing to 1; 0 or 1 sends t + noise directly.
  std::size_t mask_parts = 0;
};

/// The basis element with leading term `lead`, as lead - Dec(lead + noise).
/// Throws MathError when lead is normal.
Polynomial bulygin_recover_generator(CanOracle& o, const PublicKey& pub, const Term& lead, Rng& rng,
                                     const BulyginOptions& opts = {});

/// Reduction by recovered rules t -> Can(t). The leads are explicit so the
/// private order is not needed.
class Decryptor {
 public:
  Decryptor(std::vector<ReductionRule> rules, std::size_t nvars);
  Polynomial operator()(const Polynomial& C) const;
  const std::vector<ReductionRule>& rules() const { return rules_; }

 private:
  std::vector<ReductionRule> rules_;
  TermOrder traversal_;
};

struct AttackResult {
  StaircaseResult recon;
  Decryptor decryptor;
};

/// Reconstructs the staircase at bound D (0 means D = pub.delta) and derives
/// a decryptor from it.
AttackResult attack_commutative(CanOracle& o, const PublicKey& pub, Exponent D = 0);

struct NcProbeReport {
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t failures = 0;
  std::size_t h_size = 0;
  std::size_t queries_used = 0;
};

/// Builds H from the public set, then checks whether reduction by H recovers
/// M from random C = M + sum_j p_j g_j q_j.
NcProbeReport nc_attack_probe(NcCanOracle& o, const std::vector<NcPolynomial>& G, std::size_t trials, Rng& rng);

}  // namespace escalier
