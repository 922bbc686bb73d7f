#pragma once

#include <optional>
#include <string_view>

#include "circulant/graph.hpp"

namespace circ {

enum class IsoStatus { Isomorphic, NonIsomorphic, Unknown };

enum class IsoReason {
  AdamMultiplierFound,
  BruteForcePermutationFound,
  AdamExhaustedUnderElspasTurner,
  AdamExhaustedUnderMuzychuk,
  BruteForceExhausted,
  BudgetExceeded,
  NotIsospectral,
};

std::string_view to_string(IsoStatus s);
std::string_view to_string(IsoReason r);

// Outcome of an isomorphism decision. An Isomorphic verdict always carries a
// re-verified witness: either a unit multiplier q with q*S2 = S1, or an
// explicit vertex bijection pi with A2[pi(i)][pi(j)] = A1[i][j]. Unknown is an
// honest outcome and only ever means the node budget ran out.
struct IsomorphismVerdict {
  IsoStatus status;
  IsoReason reason;
  std::optional<Int> multiplier;
  std::optional<std::vector<Int>> permutation;
};

// Smallest q in [1, n) with gcd(q, n) = 1 and q*S2 = S1 as multisets, if any.
std::optional<Int> adam_equivalent(const CirculantGraph& g1, const CirculantGraph& g2);

// Elspas-Turner condition: neither graph has repeated eigenvalues. When it
// holds, multiplier equivalence decides isomorphism completely.
bool elspas_turner_applies(const CirculantGraph& g1, const CirculantGraph& g2);

// Muzychuk condition: n, n/2 or n/4 is an odd square-free number, in which
// case multiplier equivalence decides isomorphism for order n.
bool muzychuk_applies(Int n);

// Backtracking search over vertex bijections of directed multigraphs, with
// color refinement (in/out degrees and distance profiles, two rounds) for
// pruning. The budget counts explored search-tree nodes, never wall time.
IsomorphismVerdict brute_force_isomorphic(const CirculantGraph& g1, const CirculantGraph& g2,
                                          Int node_budget);

// Full pipeline: isospectrality gate, multiplier search, Elspas-Turner and
// Muzychuk certification of non-isomorphism, then brute force within budget.
IsomorphismVerdict decide_isomorphism(const CirculantGraph& g1, const CirculantGraph& g2,
                                      Int node_budget);
// Same, reusing spectra the caller already has.
IsomorphismVerdict decide_isomorphism(const CirculantGraph& g1, const CirculantGraph& g2,
                                      const Spectrum& s1, const Spectrum& s2, Int node_budget);

}  // namespace circ
