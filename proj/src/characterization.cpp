#include "circulant/characterization.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "parallel.hpp"

namespace circ {

bool criterion_holds(Int n, Int m) {
  if (n < 2) throw usage_error("order must be at least 2");
  if (m < 1) throw usage_error("connection size must be at least 1");
  const Factorization f = factorize(n);
  if (f.prime(0) < m) return false;
  if (f.distinct_primes() == 1) return true;
  return f.prime(1) > checked_mul(f.prime(0), m - 1);
}

ConnectionSetEnumerator::ConnectionSetEnumerator(Int n, Int m, bool allow_multisets, Int budget)
    : n_(n), m_(m), multisets_(allow_multisets) {
  if (n < 2) throw usage_error("order must be at least 2");
  if (m < 1) throw usage_error("connection size must be at least 1");
  const Int cap = budget >= INT64_MAX - 1 ? INT64_MAX - 1 : budget + 1;
  total_ = multisets_ ? binomial_capped(n - 1 + m - 1, m, cap) : binomial_capped(n - 1, m, cap);
  if (total_ > budget)
    throw resource_error("enumeration of " + std::to_string(total_) +
                         (total_ == cap ? "+" : "") + " connection sets exceeds the budget of " +
                         std::to_string(budget));
}

std::optional<ConnectionMultiset> ConnectionSetEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (!multisets_ && m_ > n_ - 1) {
      done_ = true;
      return std::nullopt;
    }
    current_.resize(static_cast<std::size_t>(m_));
    for (Int i = 0; i < m_; ++i)
      current_[static_cast<std::size_t>(i)] = multisets_ ? 1 : 1 + i;
    return ConnectionMultiset(n_, current_);
  }
  // Lexicographic successor of the current ascending tuple.
  Int i = m_ - 1;
  while (i >= 0) {
    const Int limit = multisets_ ? n_ - 1 : n_ - 1 - (m_ - 1 - i);
    if (current_[static_cast<std::size_t>(i)] < limit) break;
    --i;
  }
  if (i < 0) {
    done_ = true;
    return std::nullopt;
  }
  ++current_[static_cast<std::size_t>(i)];
  for (Int j = i + 1; j < m_; ++j)
    current_[static_cast<std::size_t>(j)] =
        multisets_ ? current_[static_cast<std::size_t>(i)] : current_[static_cast<std::size_t>(j - 1)] + 1;
  return ConnectionMultiset(n_, current_);
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

CharacterizationReport verify_characterization(Int n, Int m, bool allow_multisets, Int node_budget,
                                               Int enumeration_budget) {
  CharacterizationReport report;
  report.n = n;
  report.m = m;
  report.multisets = allow_multisets;
  report.criterion_holds = criterion_holds(n, m);

  std::vector<CirculantGraph> graphs;
  ConnectionSetEnumerator enumerator(n, m, allow_multisets, enumeration_budget);
  while (auto s = enumerator.next()) graphs.emplace_back(n, std::move(*s));

  // Spectra are independent, so they parallelize; everything downstream is a
  // deterministic merge over the enumeration order.
  std::vector<std::string> keys(graphs.size());
  detail::parallel_for(graphs.size(), detail::worker_count(),
                       [&](std::size_t i) { keys[i] = spectrum(graphs[i]).canonical_key(); });

  std::map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < graphs.size(); ++i) buckets[keys[i]].push_back(i);
  report.buckets_examined = static_cast<Int>(buckets.size());

  for (const auto& [key, members] : buckets) {
    const std::size_t k = members.size();
    report.isospectral_pairs += static_cast<Int>(k * (k - 1) / 2);
    if (k < 2) continue;

    // Spectra within a bucket get recomputed only here, where decisions are
    // actually needed.
    std::map<std::size_t, Spectrum> spectra;
    const auto spectrum_of = [&](std::size_t idx) -> const Spectrum& {
      auto it = spectra.find(idx);
      if (it == spectra.end()) it = spectra.emplace(idx, spectrum(graphs[idx])).first;
      return it->second;
    };

    UnionFind classes(k);
    for (std::size_t a = 0; a + 1 < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        if (classes.find(a) == classes.find(b)) continue;  // witnesses compose
        const std::size_t ia = members[a], ib = members[b];
        const IsomorphismVerdict v =
            decide_isomorphism(graphs[ia], graphs[ib], spectrum_of(ia), spectrum_of(ib), node_budget);
        switch (v.status) {
          case IsoStatus::Isomorphic:
            classes.unite(a, b);
            break;
          case IsoStatus::NonIsomorphic:
            report.counterexamples.emplace_back(graphs[ia].connections(), graphs[ib].connections());
            break;
          case IsoStatus::Unknown:
            report.unknown_pairs.emplace_back(graphs[ia].connections(), graphs[ib].connections());
            break;
        }
      }
    }
  }

  std::sort(report.counterexamples.begin(), report.counterexamples.end());
  std::sort(report.unknown_pairs.begin(), report.unknown_pairs.end());
  report.all_isomorphic = report.counterexamples.empty() && report.unknown_pairs.empty();
  return report;
}

}  // namespace circ
