#include "circulant/construction.hpp"

#include <algorithm>
#include <stdexcept>

namespace circ {

ConstructionParams ConstructionParams::validated(Int r, Int p, std::optional<Int> q) {
  if (r < 2) throw usage_error("construction requires r >= 2");
  if (r > 40) throw usage_error("construction exponent too large");
  if (p < 3 || p % 2 == 0 || !is_prime(p)) throw usage_error("construction requires an odd prime p");
  const Int n = checked_mul(Int(1) << r, p);
  std::optional<Int> q_norm;
  if (q) {
    const Int qn = mod_norm(*q, n);
    if (gcd(qn, n) != 1) throw usage_error("extension multiplier must be coprime to n");
    if (qn == 1) throw usage_error("extension multiplier must differ from 1 mod n");
    q_norm = qn;
  }
  return {r, p, q_norm, n};
}

std::pair<CirculantGraph, CirculantGraph> build_pair(const ConstructionParams& params) {
  const Int n = params.n;
  const Int step = Int(1) << params.r;
  const Int half = n / 2;
  std::vector<Int> a, b;
  for (Int i = 0; i <= (params.p - 1) / 2; ++i) {
    a.push_back(mod_norm(1 + i * step, n));
    b.push_back(mod_norm(1 - i * step, n));
  }
  for (Int j = 1; j <= (params.p - 1) / 2; ++j) {
    a.push_back(mod_norm(1 + j * step + half, n));
    b.push_back(mod_norm(1 - j * step + half, n));
  }
  CirculantGraph x(n, ConnectionMultiset(n, a));
  CirculantGraph y(n, ConnectionMultiset(n, b));
  if (x.degree() != params.p || y.degree() != params.p)
    throw std::logic_error("construction produced a wrong-size connection set");
  return {std::move(x), std::move(y)};
}

std::pair<CirculantGraph, CirculantGraph> extend_pair(const ConstructionParams& params) {
  if (!params.q) throw usage_error("extension requires a multiplier q");
  const auto [x, y] = build_pair(params);
  const Int n = params.n;
  const auto extend = [&](const CirculantGraph& g) {
    std::vector<Int> elems = g.connections().elements();
    const std::vector<Int> base = elems;
    for (Int e : base) elems.push_back(mod_norm(checked_mul(*params.q, e), n));
    return CirculantGraph(n, ConnectionMultiset(n, elems));
  };
  return {extend(x), extend(y)};
}

bool verify_pairing(const Spectrum& sx, const Spectrum& sy) {
  if (sx.modulus() != sy.modulus()) throw usage_error("modulus mismatch");
  const Int n = sx.modulus();
  if (n % 2 != 0) throw usage_error("pairing requires an even order");
  for (Int x = 0; x < n; ++x) {
    const Int g = gcd(x, n);
    const bool power_of_two = g > 1 && (g & (g - 1)) == 0;
    const CyclotomicValue& lhs = sx.eigenvalues()[static_cast<std::size_t>(x)];
    const CyclotomicValue& rhs = power_of_two ? sy.at(x + n / 2) : sy.eigenvalues()[static_cast<std::size_t>(x)];
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool verify_pairing(const CirculantGraph& x, const CirculantGraph& y) {
  if (x.modulus() != y.modulus()) throw usage_error("modulus mismatch");
  return verify_pairing(spectrum(x), spectrum(y));
}

bool verify_power_sum_identity(Int r, Int p, Int k_max) {
  const ConstructionParams params = ConstructionParams::validated(r, p);
  if (k_max < 0) throw usage_error("k_max must be nonnegative");
  const Int n = params.n;

  // Sum over i = 0..p-1 of z^(i * 2^(r+k)); raising k leaves it unchanged.
  const auto stepped_sum = [&](Int multiplier) {
    GroupRingElement e(n);
    for (Int i = 0; i < p; ++i) e.add_coeff(mod_norm(i * multiplier, n), 1);
    return reduce(e);
  };

  const CyclotomicValue base = stepped_sum(pow_mod(2, r, n));
  for (Int k = 0; k <= k_max; ++k)
    if (!(stepped_sum(pow_mod(2, r + k, n)) == base)) return false;
  return true;
}

bool verify_divisibility_split(const CirculantGraph& x, const CirculantGraph& y, Int p) {
  const Int n = x.modulus();
  if (y.modulus() != n) throw usage_error("modulus mismatch");
  if (p < 3 || n % p != 0) throw usage_error("p must be an odd prime factor of the order");
  Int rest = n / p;
  Int r = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++r;
  }
  if (rest != 1 || r < 2) throw usage_error("order must have the form 2^r * p with r >= 2");

  // The statement is about the exact constructed sets; anything else fails.
  const auto expected = build_pair(ConstructionParams::validated(r, p));
  if (!(x.connections() == expected.first.connections())) return false;
  if (!(y.connections() == expected.second.connections())) return false;

  const auto split = [&](const CirculantGraph& g) {
    Int divisible = 0;
    bool rest_coprime = true;
    for (Int e : g.connections().elements()) {
      if (e % p == 0)
        ++divisible;
      else if (gcd(e, n) != 1)
        rest_coprime = false;
    }
    return std::pair<Int, bool>{divisible, rest_coprime};
  };
  const auto [dx, cx] = split(x);
  const auto [dy, cy] = split(y);
  if (!cx || !cy) return false;
  return (dx == 2 && dy == 0) || (dx == 0 && dy == 2);
}

ConstructionReport full_report(const ConstructionParams& params, Int node_budget) {
  auto [base_x, base_y] = build_pair(params);
  const Spectrum sbx = spectrum(base_x);
  const Spectrum sby = spectrum(base_y);

  const bool pairing = verify_pairing(sbx, sby);
  const bool distinct = !has_repeated_eigenvalues(sbx) && !has_repeated_eigenvalues(sby);
  const bool split = verify_divisibility_split(base_x, base_y, params.p);

  if (params.q) {
    auto [ext_x, ext_y] = extend_pair(params);
    const Spectrum sex = spectrum(ext_x);
    const Spectrum sey = spectrum(ext_y);
    const bool iso = isospectral(sex, sey);
    IsomorphismVerdict verdict = decide_isomorphism(ext_x, ext_y, sex, sey, node_budget);
    return {params,  std::move(ext_x), std::move(ext_y), iso, pairing, distinct, split,
            std::move(verdict), true};
  }

  const bool iso = isospectral(sbx, sby);
  IsomorphismVerdict verdict = decide_isomorphism(base_x, base_y, sbx, sby, node_budget);
  return {params,  std::move(base_x), std::move(base_y), iso, pairing, distinct, split,
          std::move(verdict), false};
}

}  // namespace circ
