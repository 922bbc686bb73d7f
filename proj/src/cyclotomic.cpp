#include "circulant/cyclotomic.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace circ {

GroupRingElement::GroupRingElement(Int modulus) : modulus_(modulus), coeffs_() {
  if (modulus < 1) throw usage_error("group ring modulus must be positive");
  coeffs_.assign(static_cast<std::size_t>(modulus), 0);
}

GroupRingElement::GroupRingElement(Int modulus, std::vector<Int> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
  if (modulus < 1) throw usage_error("group ring modulus must be positive");
  if (coeffs_.size() != static_cast<std::size_t>(modulus))
    throw usage_error("normal form requires exactly one coefficient per exponent");
}

GroupRingElement GroupRingElement::unit(Int modulus, Int exponent) {
  GroupRingElement e(modulus);
  e.set_coeff(exponent, 1);
  return e;
}

void GroupRingElement::add_coeff(Int exponent, Int value) {
  Int& slot = coeffs_[mod_norm(exponent, modulus_)];
  slot = checked_add(slot, value);
}

bool GroupRingElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Int c) { return c == 0; });
}

bool GroupRingElement::nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Int c) { return c >= 0; });
}

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.modulus() != b.modulus()) throw usage_error("group ring modulus mismatch");
  std::vector<Int> out(a.coeffs());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(out[i], b.coeffs()[i]);
  return GroupRingElement(a.modulus(), std::move(out));
}

GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.modulus() != b.modulus()) throw usage_error("group ring modulus mismatch");
  std::vector<Int> out(a.coeffs());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_sub(out[i], b.coeffs()[i]);
  return GroupRingElement(a.modulus(), std::move(out));
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.modulus() != b.modulus()) throw usage_error("group ring modulus mismatch");
  const Int n = a.modulus();
  std::vector<Int> out(static_cast<std::size_t>(n), 0);
  for (Int i = 0; i < n; ++i) {
    const Int ai = a.coeffs()[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    for (Int j = 0; j < n; ++j) {
      const Int bj = b.coeffs()[static_cast<std::size_t>(j)];
      if (bj == 0) continue;
      Int k = i + j;
      if (k >= n) k -= n;
      Int& slot = out[static_cast<std::size_t>(k)];
      slot = checked_add(slot, checked_mul(ai, bj));
    }
  }
  return GroupRingElement(n, std::move(out));
}

GroupRingElement operator*(Int scalar, const GroupRingElement& a) {
  std::vector<Int> out(a.coeffs());
  for (Int& c : out) c = checked_mul(scalar, c);
  return GroupRingElement(a.modulus(), std::move(out));
}

CyclotomicValue::CyclotomicValue(Int modulus, std::vector<Int> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
  if (modulus < 1) throw usage_error("cyclotomic modulus must be positive");
  if (coeffs_.size() != static_cast<std::size_t>(euler_totient(modulus)))
    throw usage_error("canonical remainder has exactly deg Phi_n coefficients");
}

CyclotomicValue CyclotomicValue::zero(Int modulus) {
  return CyclotomicValue(modulus, std::vector<Int>(static_cast<std::size_t>(euler_totient(modulus)), 0));
}

CyclotomicValue CyclotomicValue::integer(Int modulus, Int value) {
  std::vector<Int> c(static_cast<std::size_t>(euler_totient(modulus)), 0);
  c[0] = value;
  return CyclotomicValue(modulus, std::move(c));
}

bool CyclotomicValue::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Int c) { return c == 0; });
}

CyclotomicValue CyclotomicValue::operator+(const CyclotomicValue& other) const {
  if (modulus_ != other.modulus_) throw usage_error("cyclotomic modulus mismatch");
  std::vector<Int> out(coeffs_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(out[i], other.coeffs_[i]);
  return CyclotomicValue(modulus_, std::move(out));
}

CyclotomicValue CyclotomicValue::operator-(const CyclotomicValue& other) const {
  if (modulus_ != other.modulus_) throw usage_error("cyclotomic modulus mismatch");
  std::vector<Int> out(coeffs_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_sub(out[i], other.coeffs_[i]);
  return CyclotomicValue(modulus_, std::move(out));
}

CyclotomicValue CyclotomicValue::operator*(const CyclotomicValue& other) const {
  if (modulus_ != other.modulus_) throw usage_error("cyclotomic modulus mismatch");
  const std::size_t da = coeffs_.size(), db = other.coeffs_.size();
  std::vector<Int> prod(da + db - 1, 0);
  for (std::size_t i = 0; i < da; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < db; ++j) {
      if (other.coeffs_[j] == 0) continue;
      prod[i + j] = checked_add(prod[i + j], checked_mul(coeffs_[i], other.coeffs_[j]));
    }
  }
  return CyclotomicValue(modulus_, detail::remainder_mod_cyclotomic(std::move(prod), modulus_));
}

namespace {

using Poly = std::vector<Int>;

Poly x_pow_minus_one(Int n) {
  Poly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p.back() = 1;
  return p;
}

// Quotient of a by the monic polynomial b; the division must be exact.
Poly exact_divide_monic(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) throw std::logic_error("division by a higher-degree polynomial");
  Poly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const Int c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    a[i] = 0;
    for (std::size_t j = 0; j < db; ++j) a[i - db + j] = checked_sub(a[i - db + j], checked_mul(c, b[j]));
  }
  for (std::size_t j = 0; j < db; ++j)
    if (a[j] != 0) throw std::logic_error("cyclotomic division left a remainder");
  return q;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(Int n) {
  if (n < 1) throw usage_error("cyclotomic polynomial index must be positive");
  static std::mutex cache_mutex;
  static std::map<Int, Poly> cache;  // node-stable, so returned references survive inserts
  {
    std::scoped_lock lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  Poly value;
  if (n == 1) {
    value = {-1, 1};
  } else {
    // Exact division keeps every intermediate degree bounded by n.
    Poly num = x_pow_minus_one(n);
    for (Int d : divisors(n))
      if (d < n) num = exact_divide_monic(std::move(num), cyclotomic_polynomial(d));
    value = std::move(num);
  }
  std::scoped_lock lock(cache_mutex);
  return cache.emplace(n, std::move(value)).first->second;
}

namespace detail {

std::vector<Int> remainder_mod_cyclotomic(std::vector<Int> poly, Int modulus) {
  const Poly& phi = cyclotomic_polynomial(modulus);
  const std::size_t d = phi.size() - 1;
  if (poly.size() < d) poly.resize(d, 0);
  for (std::size_t i = poly.size(); i-- > d;) {
    const Int c = poly[i];
    if (c == 0) continue;
    poly[i] = 0;
    for (std::size_t j = 0; j < d; ++j) poly[i - d + j] = checked_sub(poly[i - d + j], checked_mul(c, phi[j]));
  }
  poly.resize(d);
  return poly;
}

}  // namespace detail

CyclotomicValue reduce(const GroupRingElement& a) {
  return CyclotomicValue(a.modulus(), detail::remainder_mod_cyclotomic(a.coeffs(), a.modulus()));
}

bool is_in_kernel(const GroupRingElement& a) { return reduce(a).is_zero(); }

Subgroup::Subgroup(Int mod, Int ord) : modulus(mod), order(ord) {
  if (modulus < 1) throw usage_error("subgroup modulus must be positive");
  if (order < 1 || modulus % order != 0) throw usage_error("subgroup order must divide the modulus");
}

GroupRingElement sigma(const Subgroup& h) {
  GroupRingElement out(h.modulus);
  const Int step = h.generator_step();
  for (Int i = 0; i < h.order; ++i) out.set_coeff(i * step, 1);
  return out;
}

Int epsilon(const GroupRingElement& a) {
  Int sum = 0;
  for (Int c : a.coeffs()) sum = checked_add(sum, c);
  return sum;
}

Int epsilon0(const GroupRingElement& a) {
  return static_cast<Int>(std::count_if(a.coeffs().begin(), a.coeffs().end(), [](Int c) { return c != 0; }));
}

std::vector<Int> support(const GroupRingElement& a) {
  std::vector<Int> out;
  for (Int i = 0; i < a.modulus(); ++i) {
    const Int c = a.coeffs()[static_cast<std::size_t>(i)];
    if (c < 0) throw domain_error("support is undefined for negative coefficients");
    for (Int k = 0; k < c; ++k) out.push_back(i);
  }
  return out;
}

CosetSpanMembership is_coset_constant_multiple(const GroupRingElement& a, const Subgroup& h) {
  if (a.modulus() != h.modulus) throw usage_error("modulus mismatch");
  const Int step = h.generator_step();
  bool constant = true;
  // Cosets of H are exactly the residue classes mod modulus/order.
  for (Int rep = 0; rep < step && constant; ++rep) {
    const Int first = a.coeff(rep);
    for (Int i = 1; i < h.order; ++i) {
      if (a.coeff(rep + i * step) != first) {
        constant = false;
        break;
      }
    }
  }
  return {constant, constant && a.nonnegative()};
}

GroupRingElement KernelDecomposition::reconstruct() const {
  GroupRingElement out(modulus);
  if (prime1 > 0) {
    const Int step = modulus / prime1;
    for (const auto& [rep, c] : part1)
      for (Int i = 0; i < prime1; ++i) out.add_coeff(rep + i * step, c);
  }
  if (prime2 > 0) {
    const Int step = modulus / prime2;
    for (const auto& [rep, c] : part2)
      for (Int i = 0; i < prime2; ++i) out.add_coeff(rep + i * step, c);
  }
  return out;
}

namespace {

// Backtracking cover of the residual by cosets of P1 and P2. At the smallest
// exponent e with residual > 0 every decomposition must zero e using the two
// cosets through e, so the pair of contributions (k1, k2) with k1 + k2 =
// residual(e) is branched on exhaustively, larger P1 share first.
struct KernelSearch {
  Int n, p1, p2, step1, step2;
  std::vector<Int>& res;
  std::map<Int, Int>& part1;
  std::map<Int, Int>& part2;

  void add_coset(Int step, Int count, Int e, Int delta) {
    for (Int i = 0; i < count; ++i) {
      Int idx = e + i * step;
      if (idx >= n) idx -= n;
      res[static_cast<std::size_t>(idx)] += delta;
    }
  }

  Int coset_min(Int step, Int count, Int e) const {
    Int m = res[static_cast<std::size_t>(e)];
    for (Int i = 1; i < count; ++i) {
      Int idx = e + i * step;
      if (idx >= n) idx -= n;
      m = std::min(m, res[static_cast<std::size_t>(idx)]);
    }
    return m;
  }

  bool run() {
    Int e = -1;
    for (Int i = 0; i < n; ++i) {
      if (res[static_cast<std::size_t>(i)] > 0) {
        e = i;
        break;
      }
    }
    if (e < 0) return true;
    const Int need = res[static_cast<std::size_t>(e)];

    const Int max1 = std::min(need, coset_min(step1, p1, e));
    for (Int k1 = max1; k1 >= 0; --k1) {
      const Int k2 = need - k1;
      if (k2 > 0 && p2 == 0) continue;
      add_coset(step1, p1, e, -k1);
      bool feasible = true;
      if (k2 > 0) {
        feasible = coset_min(step2, p2, e) >= k2;
        if (feasible) add_coset(step2, p2, e, -k2);
      }
      if (feasible) {
        if (k1 > 0) part1.emplace(e, k1);
        if (k2 > 0) part2.emplace(e, k2);
        if (run()) return true;
        if (k1 > 0) part1.erase(e);
        if (k2 > 0) part2.erase(e);
        if (k2 > 0) add_coset(step2, p2, e, k2);
      }
      add_coset(step1, p1, e, k1);
    }
    return false;
  }
};

}  // namespace

std::optional<KernelDecomposition> decompose_kernel(const GroupRingElement& a) {
  if (!a.nonnegative()) throw domain_error("kernel decomposition requires nonnegative coefficients");
  const Int n = a.modulus();
  KernelDecomposition dec;
  dec.modulus = n;
  if (n == 1) {
    if (a.is_zero()) return dec;
    return std::nullopt;
  }
  const Factorization f = factorize(n);
  if (f.distinct_primes() > 2)
    throw unsupported_modulus_error("kernel decomposition handles at most two distinct prime factors");
  dec.prime1 = f.prime(0);
  dec.prime2 = f.distinct_primes() == 2 ? f.prime(1) : 0;

  std::vector<Int> residual = a.coeffs();
  KernelSearch search{n,
                      dec.prime1,
                      dec.prime2,
                      n / dec.prime1,
                      dec.prime2 > 0 ? n / dec.prime2 : 0,
                      residual,
                      dec.part1,
                      dec.part2};
  if (!search.run()) return std::nullopt;
  return dec;
}

namespace {

// True iff a = z^g * sigma(P) for some exponent g: coefficients are exactly 1
// on a single coset of P and 0 elsewhere.
bool is_unit_translate_of_sigma(const GroupRingElement& a, const Subgroup& p) {
  const Int n = a.modulus();
  const Int step = p.generator_step();
  Int rep = -1;
  for (Int i = 0; i < n; ++i) {
    const Int c = a.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (c != 1) return false;
    if (rep < 0) rep = i % step;
    if (i % step != rep) return false;
  }
  if (rep < 0) return false;
  for (Int i = 0; i < p.order; ++i)
    if (a.coeff(rep + i * step) != 1) return false;
  return epsilon(a) == p.order;
}

}  // namespace

EqualImageClass classify_equal_image(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.modulus() != b.modulus()) throw usage_error("group ring modulus mismatch");
  if (!a.nonnegative() || !b.nonnegative())
    throw precondition_error("coefficients of both elements must be nonnegative");
  const Int m = epsilon(a);
  if (epsilon(b) != m) throw precondition_error("epsilon(a) = epsilon(b)");
  if (!(reduce(a) == reduce(b))) throw precondition_error("reduce(a) = reduce(b)");

  const Int n = a.modulus();
  if (n == 1) return EqualImageClass::Equal;  // the map is injective on Z

  const Factorization f = factorize(n);
  const Int p1 = f.prime(0);
  if (!(p1 >= m)) throw precondition_error("p1 >= m");
  if (!(f.distinct_primes() == 1 || f.prime(1) > p1 * (m - 1)))
    throw precondition_error("s = 1 or p2 > p1*(m-1)");

  if (a == b) return EqualImageClass::Equal;
  if (m == p1) {
    const Subgroup sub(n, p1);
    if (is_unit_translate_of_sigma(a, sub) && is_unit_translate_of_sigma(b, sub))
      return EqualImageClass::BothCosetSums;
  }
  return EqualImageClass::NeitherCaseApplies;
}

}  // namespace circ
