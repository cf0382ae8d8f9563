#include "escalier/field.hpp"

#include <string>

#include "escalier/error.hpp"

namespace escalier {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

PrimeField::PrimeField(Coeff p) : p_(p) {
  if (p >= (Coeff{1} << 31) || !is_prime(p))
    throw MathError("field modulus must be a prime below 2^31, got " + std::to_string(p));
}

Coeff PrimeField::inv(Coeff a) const {
  if (a == 0) throw MathError("division by zero in prime field");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a, e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Coeff>(result);
}

}  // namespace escalier
