#pragma once

#include <cstdint>
#include <vector>

#include "circulant/errors.hpp"

namespace circ {

using Int = std::int64_t;

// Checked machine arithmetic. Throws overflow_error instead of wrapping;
// every coefficient path in the library goes through these.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

// Representative of a mod n in [0, n). n must be positive.
Int mod_norm(Int a, Int n);

// Nonnegative gcd; gcd(0, 0) = 0.
Int gcd(Int a, Int b);

// (base^exp) mod n for exp >= 0, n >= 1.
Int pow_mod(Int base, Int exp, Int n);

struct PrimePower {
  Int prime;
  Int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// n = p1^r1 * p2^r2 * ... with p1 < p2 < ... all prime, exponents >= 1.
struct Factorization {
  Int n = 1;
  std::vector<PrimePower> factors;

  std::size_t distinct_primes() const { return factors.size(); }
  Int prime(std::size_t i) const { return factors[i].prime; }
};

// Trial division; rejects n < 2 as a usage error.
Factorization factorize(Int n);

bool is_prime(Int n);

// Euler's totient; phi(1) = 1.
Int euler_totient(Int n);

// True for odd square-free n; 1 counts as odd and square-free.
bool is_odd_squarefree(Int n);

// All positive divisors of n, ascending.
std::vector<Int> divisors(Int n);

// binomial(a, b), saturating at `cap` instead of overflowing.
Int binomial_capped(Int a, Int b, Int cap);

}  // namespace circ
