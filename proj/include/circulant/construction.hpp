#pragma once

#include <optional>
#include <utility>

#include "circulant/isomorphism.hpp"

namespace circ {

inline constexpr Int kDefaultProbeBudget = 100'000'000;

// Parameters of the isospectral-pair construction on n = 2^r * p vertices:
// r >= 2 and an odd prime p, plus an optional extension multiplier q coprime
// to n with q != 1 mod n.
struct ConstructionParams {
  static ConstructionParams validated(Int r, Int p, std::optional<Int> q = std::nullopt);

  Int r;
  Int p;
  std::optional<Int> q;  // stored reduced mod n
  Int n;
};

// The base pair X = Cay(Z_n, A), Y = Cay(Z_n, B) with
//   A = {1 + i*2^r | 0 <= i <= (p-1)/2} u {1 + j*2^r + n/2 | 1 <= j <= (p-1)/2}
//   B = {1 - i*2^r | 0 <= i <= (p-1)/2} u {1 - j*2^r + n/2 | 1 <= j <= (p-1)/2}
// reduced mod n; both sets have exactly p elements. X and Y are isospectral
// but not isomorphic.
std::pair<CirculantGraph, CirculantGraph> build_pair(const ConstructionParams& params);

// The extended pair on A u qA and B u qB as multiset unions (a repeated
// element becomes multiplicity 2); connection size 2p. Requires q.
std::pair<CirculantGraph, CirculantGraph> extend_pair(const ConstructionParams& params);

// Index-sensitive pairing of the two spectra: lambda_x equals mu_{x + n/2}
// when gcd(x, n) is a power of two greater than 1, and mu_x otherwise.
// Exact equality of canonical remainders throughout.
bool verify_pairing(const CirculantGraph& x, const CirculantGraph& y);
bool verify_pairing(const Spectrum& sx, const Spectrum& sy);

// The power-of-two sum identity behind the pairing: for n = 2^r * p and all
// 0 <= k <= k_max, sum_{i=0}^{p-1} omega^(i * 2^(r+k)) equals the k = 0 sum,
// compared as exact remainders.
bool verify_power_sum_identity(Int r, Int p, Int k_max);

// Divisibility split of the base connection sets: x and y must be exactly the
// constructed pair, one set entirely coprime to n, the other containing
// exactly two elements divisible by p (and otherwise coprime). Any tampering
// with the sets makes this return false.
bool verify_divisibility_split(const CirculantGraph& x, const CirculantGraph& y, Int p);

struct ConstructionReport {
  ConstructionParams params;
  CirculantGraph graph_x;  // the reported pair: base, or extended when q is set
  CirculantGraph graph_y;
  bool isospectral;             // exact multiset equality of the reported pair
  bool pairing_verified;        // index pairing on the base pair
  bool distinct_eigenvalues;    // base pair has no repeated eigenvalues
  bool divisibility_split;      // base connection sets split as described
  IsomorphismVerdict verdict;   // decision on the reported pair
  bool open_question_data;      // true when q is set: the verdict is data, not
                                // a theorem
};

// Builds the pair (extended when q is present), checks every construction
// property, and decides isomorphism. For the base construction all four flags
// must be true and the verdict NonIsomorphic; a falsehood there is a bug.
ConstructionReport full_report(const ConstructionParams& params, Int node_budget = kDefaultProbeBudget);

}  // namespace circ
