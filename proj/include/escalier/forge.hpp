#pragma once

#include <memory>
#include <vector>

#include "escalier/oracle.hpp"
#include "escalier/staircase.hpp"

namespace escalier {

/// The pair I = X2*J and I_delta = X2*J + (h0), which agree on every
/// polynomial of degree <= delta but have different Groebner bases.
struct ForgeOutput {
  TermOrder order{OrderKind::DegLex, 2};
  Exponent delta = 0;
  std::vector<Polynomial> J_basis;     // reduced basis of J
  Term omega;                          // min of the degree delta+1 terms of T(J), by search
  Term omega_closed_form;              // X1^(delta+1-d_s) * T(gamma_s)
  bool closed_form_matches = false;
  Polynomial h0{2, PrimeField()};      // omega - Can(omega, J)
  std::vector<Polynomial> H;           // h0, X2*gamma_1, ..., X2*gamma_s
  std::vector<Polynomial> I_generators;  // X2*gamma_i
  bool H_is_groebner = false;
  std::unique_ptr<GroebnerOracle> oracle_I;
  std::unique_ptr<GroebnerOracle> oracle_Idelta;
};

/// Requires a degree-compatible order with the default precedence
/// X1 < X2 < ... < Xn, n >= 2, a nonzero J, and delta >= gb_degree(J) + 1.
ForgeOutput build_counterexample(const std::vector<Polynomial>& J_generators, const TermOrder& order, Exponent delta);

struct BoundReport {
  Exponent D_small = 0;
  Exponent D_big = 0;
  StaircaseResult small;           // reconstruct on I_delta at D_small
  StaircaseResult big;             // reconstruct on I_delta at D_big
  StaircaseResult small_on_I;      // reconstruct on I at D_small
  std::vector<Term> expected_small;  // G(X2*J) within B(D_small)
  std::vector<Term> expected_big;    // G(I_delta) within B(D_big)
  bool small_matches = false;
  bool big_matches = false;
  bool agree_below = false;        // small == small_on_I
  bool differ = false;
};

/// Runs the reconstruction against the I_delta oracle at both bounds.
/// D_small = 0 and D_big = 0 default to delta and delta + 1.
BoundReport demonstrate_bound_necessity(ForgeOutput& f, Exponent D_small = 0, Exponent D_big = 0);

}  // namespace escalier
