#include "circulant/numeric.hpp"

#include <algorithm>
#include <numeric>

namespace circ {

Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) throw overflow_error("integer addition overflowed");
  return out;
}

Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) throw overflow_error("integer subtraction overflowed");
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw overflow_error("integer multiplication overflowed");
  return out;
}

Int mod_norm(Int a, Int n) {
  if (n <= 0) throw usage_error("modulus must be positive");
  Int r = a % n;
  return r < 0 ? r + n : r;
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int pow_mod(Int base, Int exp, Int n) {
  if (n <= 0) throw usage_error("modulus must be positive");
  if (exp < 0) throw usage_error("exponent must be nonnegative");
  unsigned __int128 acc = 1 % static_cast<unsigned __int128>(n);
  unsigned __int128 b = static_cast<unsigned __int128>(mod_norm(base, n));
  while (exp > 0) {
    if (exp & 1) acc = acc * b % static_cast<unsigned __int128>(n);
    b = b * b % static_cast<unsigned __int128>(n);
    exp >>= 1;
  }
  return static_cast<Int>(acc);
}

Factorization factorize(Int n) {
  if (n < 2) throw usage_error("factorization requires n >= 2");
  Factorization f;
  f.n = n;
  Int rest = n;
  for (Int p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    Int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  if (rest > 1) f.factors.push_back({rest, 1});
  return f;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

Int euler_totient(Int n) {
  if (n < 1) throw usage_error("totient requires n >= 1");
  if (n == 1) return 1;
  Int phi = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    Int pe = p;
    for (Int i = 1; i < e; ++i) pe = checked_mul(pe, p);
    phi = checked_mul(phi, pe - pe / p);
  }
  return phi;
}

bool is_odd_squarefree(Int n) {
  if (n < 1) return false;
  if (n % 2 == 0) return false;
  if (n == 1) return true;
  const Factorization f = factorize(n);
  return std::all_of(f.factors.begin(), f.factors.end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

std::vector<Int> divisors(Int n) {
  if (n < 1) throw usage_error("divisors require n >= 1");
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Int binomial_capped(Int a, Int b, Int cap) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  unsigned __int128 acc = 1;
  for (Int i = 1; i <= b; ++i) {
    acc = acc * static_cast<unsigned __int128>(a - b + i);
    acc /= static_cast<unsigned __int128>(i);
    if (acc > static_cast<unsigned __int128>(cap)) return cap;
  }
  return static_cast<Int>(acc);
}

}  // namespace circ
