#include "circulant/json_io.hpp"

namespace circ {

using nlohmann::json;

json to_json(const Spectrum& s) {
  json eigenvalues = json::array();
  for (const auto& value : s.eigenvalues()) eigenvalues.push_back(value.coeffs());
  return json{{"n", s.modulus()}, {"eigenvalues", std::move(eigenvalues)}, {"canonical_key", s.canonical_key_hex()}};
}

json to_json(const IsomorphismVerdict& v) {
  json out{{"status", to_string(v.status)}, {"reason", to_string(v.reason)}};
  if (v.multiplier) out["witness"] = json{{"type", "multiplier"}, {"value", *v.multiplier}};
  if (v.permutation) out["witness"] = json{{"type", "permutation"}, {"value", *v.permutation}};
  return out;
}

namespace {

json pairs_to_json(Int modulus, const std::vector<GraphPair>& pairs) {
  json out = json::array();
  for (const auto& [a, b] : pairs)
    out.push_back(json::array({format_graph(CirculantGraph(modulus, a)), format_graph(CirculantGraph(modulus, b))}));
  return out;
}

json graph_to_json(const CirculantGraph& g) {
  return json{{"text", format_graph(g)},
              {"simple", g.connections().is_simple()},
              {"undirected", g.connections().is_undirected()}};
}

}  // namespace

json to_json(const CharacterizationReport& r) {
  return json{{"n", r.n},
              {"m", r.m},
              {"multisets", r.multisets},
              {"criterion_holds", r.criterion_holds},
              {"buckets_examined", r.buckets_examined},
              {"isospectral_pairs", r.isospectral_pairs},
              {"all_isomorphic", r.all_isomorphic},
              {"counterexamples", pairs_to_json(r.n, r.counterexamples)},
              {"unknown_pairs", pairs_to_json(r.n, r.unknown_pairs)}};
}

json to_json(const ConstructionReport& r) {
  json params{{"r", r.params.r}, {"p", r.params.p}, {"n", r.params.n}};
  params["q"] = r.params.q ? json(*r.params.q) : json(nullptr);
  return json{{"params", std::move(params)},
              {"graph_x", graph_to_json(r.graph_x)},
              {"graph_y", graph_to_json(r.graph_y)},
              {"isospectral", r.isospectral},
              {"pairing_verified", r.pairing_verified},
              {"distinct_eigenvalues", r.distinct_eigenvalues},
              {"divisibility_split", r.divisibility_split},
              {"verdict", to_json(r.verdict)},
              {"open_question_data", r.open_question_data}};
}

}  // namespace circ
