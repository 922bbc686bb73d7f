#include "circulant/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace circ {

std::string_view to_string(IsoStatus s) {
  switch (s) {
    case IsoStatus::Isomorphic: return "Isomorphic";
    case IsoStatus::NonIsomorphic: return "NonIsomorphic";
    case IsoStatus::Unknown: return "Unknown";
  }
  throw std::logic_error("unhandled status");
}

std::string_view to_string(IsoReason r) {
  switch (r) {
    case IsoReason::AdamMultiplierFound: return "AdamMultiplierFound";
    case IsoReason::BruteForcePermutationFound: return "BruteForcePermutationFound";
    case IsoReason::AdamExhaustedUnderElspasTurner: return "AdamExhaustedUnderElspasTurner";
    case IsoReason::AdamExhaustedUnderMuzychuk: return "AdamExhaustedUnderMuzychuk";
    case IsoReason::BruteForceExhausted: return "BruteForceExhausted";
    case IsoReason::BudgetExceeded: return "BudgetExceeded";
    case IsoReason::NotIsospectral: return "NotIsospectral";
  }
  throw std::logic_error("unhandled reason");
}

std::optional<Int> adam_equivalent(const CirculantGraph& g1, const CirculantGraph& g2) {
  if (g1.modulus() != g2.modulus()) throw usage_error("modulus mismatch");
  const Int n = g1.modulus();
  for (Int q = 1; q < n; ++q) {
    if (gcd(q, n) != 1) continue;
    if (g2.connections().scaled(q) == g1.connections()) return q;
  }
  return std::nullopt;
}

bool elspas_turner_applies(const CirculantGraph& g1, const CirculantGraph& g2) {
  if (g1.modulus() != g2.modulus()) throw usage_error("modulus mismatch");
  return !has_repeated_eigenvalues(g1) && !has_repeated_eigenvalues(g2);
}

bool muzychuk_applies(Int n) {
  if (n < 2) throw usage_error("order must be at least 2");
  if (is_odd_squarefree(n)) return true;
  if (n % 2 == 0 && is_odd_squarefree(n / 2)) return true;
  if (n % 4 == 0 && is_odd_squarefree(n / 4)) return true;
  return false;
}

namespace {

using Matrix = std::vector<std::vector<Int>>;

// Joint color refinement of two graphs: two explicit invariant stages
// (degree/distance profiles, then two rounds of neighborhood color
// propagation). Colors are shared across the graphs so equal signatures get
// equal ids.
struct Coloring {
  std::vector<int> c1, c2;
  bool multisets_match;
};

std::vector<Int> distance_profile(const Matrix& adj, Int start, bool reversed) {
  const Int n = static_cast<Int>(adj.size());
  std::vector<Int> dist(static_cast<std::size_t>(n), -1);
  std::vector<Int> queue;
  queue.push_back(start);
  dist[static_cast<std::size_t>(start)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Int v = queue[head];
    for (Int w = 0; w < n; ++w) {
      const Int weight = reversed ? adj[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)]
                                  : adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
      if (weight > 0 && dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<Int> histogram(static_cast<std::size_t>(n) + 1, 0);
  for (Int d : dist) {
    if (d < 0)
      ++histogram.back();  // unreachable bucket
    else
      ++histogram[static_cast<std::size_t>(d)];
  }
  return histogram;
}

std::vector<Int> initial_signature(const Matrix& adj, Int v) {
  const Int n = static_cast<Int>(adj.size());
  std::vector<Int> out_mults, in_mults;
  for (Int w = 0; w < n; ++w) {
    if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] > 0)
      out_mults.push_back(adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]);
    if (adj[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)] > 0)
      in_mults.push_back(adj[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)]);
  }
  std::sort(out_mults.begin(), out_mults.end());
  std::sort(in_mults.begin(), in_mults.end());
  std::vector<Int> sig;
  const auto extend = [&sig](const std::vector<Int>& part) {
    sig.push_back(-1);  // separator
    sig.insert(sig.end(), part.begin(), part.end());
  };
  extend(out_mults);
  extend(in_mults);
  extend(distance_profile(adj, v, false));
  extend(distance_profile(adj, v, true));
  return sig;
}

std::vector<Int> refined_signature(const Matrix& adj, const std::vector<int>& colors, Int v) {
  const Int n = static_cast<Int>(adj.size());
  std::vector<std::pair<Int, Int>> out_pairs, in_pairs;
  for (Int w = 0; w < n; ++w) {
    const Int fwd = adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
    const Int back = adj[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)];
    if (fwd > 0) out_pairs.emplace_back(fwd, colors[static_cast<std::size_t>(w)]);
    if (back > 0) in_pairs.emplace_back(back, colors[static_cast<std::size_t>(w)]);
  }
  std::sort(out_pairs.begin(), out_pairs.end());
  std::sort(in_pairs.begin(), in_pairs.end());
  std::vector<Int> sig{colors[static_cast<std::size_t>(v)]};
  for (const auto& [m, c] : out_pairs) {
    sig.push_back(m);
    sig.push_back(c);
  }
  sig.push_back(-1);
  for (const auto& [m, c] : in_pairs) {
    sig.push_back(m);
    sig.push_back(c);
  }
  return sig;
}

Coloring refine_colors(const Matrix& a1, const Matrix& a2) {
  const Int n = static_cast<Int>(a1.size());
  std::vector<int> c1(static_cast<std::size_t>(n)), c2(static_cast<std::size_t>(n));

  std::map<std::vector<Int>, int> palette;
  const auto color_of = [&palette](std::vector<Int> sig) {
    return palette.emplace(std::move(sig), static_cast<int>(palette.size())).first->second;
  };

  for (Int v = 0; v < n; ++v) c1[static_cast<std::size_t>(v)] = color_of(initial_signature(a1, v));
  for (Int v = 0; v < n; ++v) c2[static_cast<std::size_t>(v)] = color_of(initial_signature(a2, v));

  for (int round = 0; round < 2; ++round) {
    std::map<std::vector<Int>, int> next_palette;
    const auto next_color = [&next_palette](std::vector<Int> sig) {
      return next_palette.emplace(std::move(sig), static_cast<int>(next_palette.size())).first->second;
    };
    std::vector<int> n1(static_cast<std::size_t>(n)), n2(static_cast<std::size_t>(n));
    for (Int v = 0; v < n; ++v) n1[static_cast<std::size_t>(v)] = next_color(refined_signature(a1, c1, v));
    for (Int v = 0; v < n; ++v) n2[static_cast<std::size_t>(v)] = next_color(refined_signature(a2, c2, v));
    c1 = std::move(n1);
    c2 = std::move(n2);
  }

  std::vector<int> s1 = c1, s2 = c2;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  return {std::move(c1), std::move(c2), s1 == s2};
}

// Vertex order for the backtracking search: expand along edges so each new
// vertex is constrained by already-mapped neighbors whenever the graph allows.
std::vector<Int> expansion_order(const Matrix& adj) {
  const Int n = static_cast<Int>(adj.size());
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<Int> order;
  order.reserve(static_cast<std::size_t>(n));
  while (static_cast<Int>(order.size()) < n) {
    Int pick = -1;
    for (Int v = 0; v < n && pick < 0; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      for (Int u : order) {
        if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] > 0 ||
            adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] > 0) {
          pick = v;
          break;
        }
      }
    }
    if (pick < 0) {
      for (Int v = 0; v < n; ++v) {
        if (!used[static_cast<std::size_t>(v)]) {
          pick = v;
          break;
        }
      }
    }
    used[static_cast<std::size_t>(pick)] = true;
    order.push_back(pick);
  }
  return order;
}

struct BacktrackSearch {
  const Matrix& a1;
  const Matrix& a2;
  const std::vector<int>& c1;
  const std::vector<int>& c2;
  const std::vector<Int>& order;
  Int n;
  Int budget;
  Int nodes = 0;
  bool aborted = false;
  std::vector<Int> map1to2;
  std::vector<bool> used2;

  bool consistent(Int v, Int w, std::size_t depth) const {
    for (std::size_t d = 0; d < depth; ++d) {
      const Int u = order[d];
      const Int pu = map1to2[static_cast<std::size_t>(u)];
      if (a1[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] !=
          a2[static_cast<std::size_t>(pu)][static_cast<std::size_t>(w)])
        return false;
      if (a1[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] !=
          a2[static_cast<std::size_t>(w)][static_cast<std::size_t>(pu)])
        return false;
    }
    return true;
  }

  bool dfs(std::size_t depth) {
    if (depth == static_cast<std::size_t>(n)) return true;
    const Int v = order[depth];
    for (Int w = 0; w < n; ++w) {
      if (used2[static_cast<std::size_t>(w)]) continue;
      if (c1[static_cast<std::size_t>(v)] != c2[static_cast<std::size_t>(w)]) continue;
      // Translations are automorphisms of every circulant graph, so the very
      // first image can be pinned without losing completeness.
      if (depth == 0 && w != 0) break;
      if (++nodes > budget) {
        aborted = true;
        return false;
      }
      if (!consistent(v, w, depth)) continue;
      map1to2[static_cast<std::size_t>(v)] = w;
      used2[static_cast<std::size_t>(w)] = true;
      if (dfs(depth + 1)) return true;
      used2[static_cast<std::size_t>(w)] = false;
      if (aborted) return false;
    }
    return false;
  }
};

bool permutation_conjugates(const Matrix& a1, const Matrix& a2, const std::vector<Int>& pi) {
  const Int n = static_cast<Int>(a1.size());
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < n; ++j)
      if (a1[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          a2[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)])]
            [static_cast<std::size_t>(pi[static_cast<std::size_t>(j)])])
        return false;
  return true;
}

}  // namespace

IsomorphismVerdict brute_force_isomorphic(const CirculantGraph& g1, const CirculantGraph& g2,
                                          Int node_budget) {
  if (g1.modulus() != g2.modulus()) throw usage_error("modulus mismatch");
  if (node_budget < 1) throw usage_error("node budget must be positive");
  const Int n = g1.modulus();
  const Matrix a1 = adjacency_matrix(g1, n);
  const Matrix a2 = adjacency_matrix(g2, n);

  const Coloring colors = refine_colors(a1, a2);
  if (!colors.multisets_match)
    return {IsoStatus::NonIsomorphic, IsoReason::BruteForceExhausted, std::nullopt, std::nullopt};

  const std::vector<Int> order = expansion_order(a1);
  BacktrackSearch search{a1,
                         a2,
                         colors.c1,
                         colors.c2,
                         order,
                         n,
                         node_budget,
                         0,
                         false,
                         std::vector<Int>(static_cast<std::size_t>(n), -1),
                         std::vector<bool>(static_cast<std::size_t>(n), false)};
  const bool found = search.dfs(0);
  if (search.aborted)
    return {IsoStatus::Unknown, IsoReason::BudgetExceeded, std::nullopt, std::nullopt};
  if (!found)
    return {IsoStatus::NonIsomorphic, IsoReason::BruteForceExhausted, std::nullopt, std::nullopt};
  if (!permutation_conjugates(a1, a2, search.map1to2))
    throw std::logic_error("search produced a permutation that fails re-verification");
  return {IsoStatus::Isomorphic, IsoReason::BruteForcePermutationFound, std::nullopt, search.map1to2};
}

IsomorphismVerdict decide_isomorphism(const CirculantGraph& g1, const CirculantGraph& g2,
                                      const Spectrum& s1, const Spectrum& s2, Int node_budget) {
  if (g1.modulus() != g2.modulus()) throw usage_error("modulus mismatch");
  if (!isospectral(s1, s2))
    return {IsoStatus::NonIsomorphic, IsoReason::NotIsospectral, std::nullopt, std::nullopt};

  if (auto q = adam_equivalent(g1, g2)) {
    if (!(g2.connections().scaled(*q) == g1.connections()))
      throw std::logic_error("multiplier witness fails re-verification");
    return {IsoStatus::Isomorphic, IsoReason::AdamMultiplierFound, q, std::nullopt};
  }

  if (!has_repeated_eigenvalues(s1) && !has_repeated_eigenvalues(s2))
    return {IsoStatus::NonIsomorphic, IsoReason::AdamExhaustedUnderElspasTurner, std::nullopt,
            std::nullopt};
  if (muzychuk_applies(g1.modulus()))
    return {IsoStatus::NonIsomorphic, IsoReason::AdamExhaustedUnderMuzychuk, std::nullopt,
            std::nullopt};

  return brute_force_isomorphic(g1, g2, node_budget);
}

IsomorphismVerdict decide_isomorphism(const CirculantGraph& g1, const CirculantGraph& g2,
                                      Int node_budget) {
  if (g1.modulus() != g2.modulus()) throw usage_error("modulus mismatch");
  return decide_isomorphism(g1, g2, spectrum(g1), spectrum(g2), node_budget);
}

}  // namespace circ
