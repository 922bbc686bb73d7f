#pragma once

#include <map>
#include <optional>
#include <vector>

#include "circulant/numeric.hpp"

namespace circ {

// Element of the integer group ring over the cyclic group of order n, kept in
// normal form: coeffs()[i] is the coefficient of z^i, 0 <= i < n. Exponent
// access is always reduced mod n, so coeff(j) for j >= n reads coeff(j mod n).
class GroupRingElement {
 public:
  explicit GroupRingElement(Int modulus);
  GroupRingElement(Int modulus, std::vector<Int> coeffs);

  // z^exponent (exponent reduced mod n).
  static GroupRingElement unit(Int modulus, Int exponent);

  Int modulus() const { return modulus_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  Int coeff(Int exponent) const { return coeffs_[mod_norm(exponent, modulus_)]; }
  void set_coeff(Int exponent, Int value) { coeffs_[mod_norm(exponent, modulus_)] = value; }
  void add_coeff(Int exponent, Int value);

  bool is_zero() const;
  bool nonnegative() const;

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  Int modulus_;
  std::vector<Int> coeffs_;
};

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b);
// Cyclic convolution: the product in the group ring.
GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement operator*(Int scalar, const GroupRingElement& a);

// The image of a group-ring element under z -> omega, with omega a fixed
// primitive n-th root of unity, stored as the canonical remainder modulo the
// n-th cyclotomic polynomial. Componentwise equality of remainders decides
// exact equality in Z[omega]; no floating point is involved.
class CyclotomicValue {
 public:
  CyclotomicValue(Int modulus, std::vector<Int> coeffs);

  static CyclotomicValue zero(Int modulus);
  static CyclotomicValue integer(Int modulus, Int value);

  Int modulus() const { return modulus_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  friend bool operator==(const CyclotomicValue&, const CyclotomicValue&) = default;

  CyclotomicValue operator+(const CyclotomicValue& other) const;
  CyclotomicValue operator-(const CyclotomicValue& other) const;
  CyclotomicValue operator*(const CyclotomicValue& other) const;

 private:
  Int modulus_;
  std::vector<Int> coeffs_;
};

// The n-th cyclotomic polynomial as a dense monic integer polynomial,
// low-degree coefficients first. Computed by exact division of x^n - 1 by the
// cyclotomic polynomials of the proper divisors of n, and cached; the cache is
// safe for concurrent use.
const std::vector<Int>& cyclotomic_polynomial(Int n);

namespace detail {
// Remainder of an arbitrary dense integer polynomial modulo the n-th
// cyclotomic polynomial; result has exactly deg Phi_n coefficients.
std::vector<Int> remainder_mod_cyclotomic(std::vector<Int> poly, Int modulus);
}  // namespace detail

// phi(a) in coordinates: the canonical remainder of sum C_i x^i mod Phi_n.
// A ring homomorphism: reduce(a+b) = reduce(a)+reduce(b), likewise products.
CyclotomicValue reduce(const GroupRingElement& a);

// True iff a maps to zero, i.e. a is a vanishing sum of roots of unity.
bool is_in_kernel(const GroupRingElement& a);

// The unique subgroup of the given order inside the cyclic group of order
// `modulus`; its elements are the multiples of modulus/order.
struct Subgroup {
  Subgroup(Int modulus, Int order);
  Int modulus;
  Int order;
  Int generator_step() const { return modulus / order; }
};

// Sum of all elements of the subgroup: coefficient 1 at each multiple of
// modulus/order. In the kernel whenever the subgroup is nontrivial.
GroupRingElement sigma(const Subgroup& h);

// Sum of coefficients.
Int epsilon(const GroupRingElement& a);
// Number of nonzero coefficients.
Int epsilon0(const GroupRingElement& a);
// The support as a sorted multiset of exponents, exponent i repeated
// coeff(i) times. Requires nonnegative coefficients.
std::vector<Int> support(const GroupRingElement& a);

struct CosetSpanMembership {
  // a lies in the ideal generated by sigma(H) over integer coefficients,
  // equivalently its coefficients are constant on every coset of H.
  bool in_integer_span;
  // additionally all coefficients are nonnegative, so the multipliers can be
  // chosen nonnegative as well.
  bool in_natural_span;
};

CosetSpanMembership is_coset_constant_multiple(const GroupRingElement& a, const Subgroup& h);

// A witnessed expression of a nonnegative kernel element as
//   sum a_g * g * sigma(P1)  +  sum b_g * g * sigma(P2)
// where P1, P2 are the subgroups of prime order p1 < p2 dividing the modulus.
// Keys are coset-representative exponents (the smallest exponent of the
// coset); stored coefficients are >= 1.
struct KernelDecomposition {
  Int modulus = 1;
  Int prime1 = 0;  // order of P1, 0 when the modulus is 1
  Int prime2 = 0;  // order of P2, 0 when the modulus is a prime power
  std::map<Int, Int> part1;
  std::map<Int, Int> part2;

  GroupRingElement reconstruct() const;
};

// Searches for a decomposition by backtracking over the cosets of P1 and P2:
// at the smallest uncovered exponent the P1-coset is tried first with the
// largest feasible coefficient, the P2-coset absorbs the rest. Complete for
// moduli with at most two distinct prime factors; a decomposition exists iff
// the element is in the kernel. Nonnegative input required.
std::optional<KernelDecomposition> decompose_kernel(const GroupRingElement& a);

enum class EqualImageClass {
  Equal,             // a and b agree coefficientwise
  BothCosetSums,     // both are unit translates of sigma(P1), m = p1
  NeitherCaseApplies // unreachable under the hypotheses; signals a bug
};

// Classifies two nonnegative elements with equal coefficient sums m and equal
// images under reduce, assuming p1 >= m and (one prime factor or
// p2 > p1*(m-1)). Hypotheses are checked; a violation throws
// precondition_error naming the violated clause. The second case is verified
// constructively, never assumed.
EqualImageClass classify_equal_image(const GroupRingElement& a, const GroupRingElement& b);

}  // namespace circ
