#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "circulant/isomorphism.hpp"

namespace circ {

inline constexpr Int kDefaultNodeBudget = 10'000'000;
inline constexpr Int kDefaultEnumerationBudget = 2'000'000;

// The spectral-characterization criterion: with n = p1^r1 * ... * ps^rs,
// p1 < ... < ps prime, a connection (multi)set size m is covered when
// p1 >= m and (s = 1 or p2 > p1*(m-1)). When it holds, isospectral circulant
// graphs of order n with m connections must be isomorphic.
bool criterion_holds(Int n, Int m);

// Streams all size-m subsets (or multisets) of {1, ..., n-1} in lexicographic
// order, each exactly once. The constructor rejects enumerations larger than
// `budget` with a resource error naming the count.
class ConnectionSetEnumerator {
 public:
  ConnectionSetEnumerator(Int n, Int m, bool allow_multisets, Int budget = kDefaultEnumerationBudget);

  std::optional<ConnectionMultiset> next();
  Int total_count() const { return total_; }

 private:
  Int n_;
  Int m_;
  bool multisets_;
  Int total_;
  std::vector<Int> current_;
  bool started_ = false;
  bool done_ = false;
};

using GraphPair = std::pair<ConnectionMultiset, ConnectionMultiset>;

struct CharacterizationReport {
  Int n = 0;
  Int m = 0;
  bool multisets = false;
  bool criterion_holds = false;
  Int buckets_examined = 0;   // number of distinct spectra seen
  Int isospectral_pairs = 0;  // unordered pairs sharing a spectrum
  bool all_isomorphic = false;
  std::vector<GraphPair> counterexamples;  // isospectral but non-isomorphic
  std::vector<GraphPair> unknown_pairs;    // decider ran out of budget
};

// Exhaustive check of the criterion at one (n, m) point: enumerates every
// connection (multi)set, buckets by exact spectrum, and decides isomorphism
// within buckets. Witnessed isomorphisms are composed through a union-find so
// only cross-component pairs are tested. When criterion_holds(n, m) and no
// decision was Unknown, all_isomorphic must come back true.
CharacterizationReport verify_characterization(Int n, Int m, bool allow_multisets,
                                               Int node_budget = kDefaultNodeBudget,
                                               Int enumeration_budget = kDefaultEnumerationBudget);

}  // namespace circ
