#pragma once

#include <cstdint>

namespace escalier {

using Coeff = std::uint32_t;

/// Arithmetic in Z/pZ for a prime p < 2^31. Residues are kept in [0, p).
class PrimeField {
 public:
  static constexpr Coeff kDefaultPrime = 32003;

  explicit PrimeField(Coeff p = kDefaultPrime);

  Coeff prime() const { return p_; }

  Coeff reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Throws MathError on zero.
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  Coeff p_;
};

bool is_prime(std::uint64_t p);

}  // namespace escalier
