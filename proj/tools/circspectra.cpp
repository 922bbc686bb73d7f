// circspectra: exact spectra, isospectrality and isomorphism decisions for
// circulant graphs, with machine-readable JSON output.
//
// Exit codes: 0 success, 1 usage or input error, 2 a verified mathematical
// property failed to hold (for CI use).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "circulant/characterization.hpp"
#include "circulant/construction.hpp"
#include "circulant/json_io.hpp"
#include "circulant/version.hpp"

namespace {

using circ::Int;
using nlohmann::json;

struct Output {
  json envelope;
  int exit_code = 0;
};

json envelope(const std::string& command, json inputs, json result) {
  return json{{"command", command},
              {"inputs", std::move(inputs)},
              {"result", std::move(result)},
              {"version", circ::kVersion},
              {"exact", true}};
}

Output run_spectrum(const std::string& graph_text) {
  const circ::CirculantGraph g = circ::parse_graph(graph_text);
  return {envelope("spectrum", {{"graph", graph_text}}, circ::to_json(circ::spectrum(g)))};
}

Output run_isospectral(const std::string& g1_text, const std::string& g2_text) {
  const circ::CirculantGraph g1 = circ::parse_graph(g1_text);
  const circ::CirculantGraph g2 = circ::parse_graph(g2_text);
  return {envelope("isospectral", {{"graph1", g1_text}, {"graph2", g2_text}},
                   circ::isospectral(g1, g2))};
}

Output run_isomorphic(const std::string& g1_text, const std::string& g2_text, Int budget) {
  const circ::CirculantGraph g1 = circ::parse_graph(g1_text);
  const circ::CirculantGraph g2 = circ::parse_graph(g2_text);
  const circ::IsomorphismVerdict v = circ::decide_isomorphism(g1, g2, budget);
  return {envelope("isomorphic", {{"graph1", g1_text}, {"graph2", g2_text}, {"budget", budget}},
                   circ::to_json(v))};
}

Output run_construct(Int r, Int p, std::optional<Int> q, Int budget) {
  const auto params = circ::ConstructionParams::validated(r, p, q);
  const circ::ConstructionReport report = circ::full_report(params, budget);

  json inputs{{"r", r}, {"p", p}, {"budget", budget}};
  inputs["q"] = q ? json(*q) : json(nullptr);

  // The base pair's properties are theorems; the extension's verdict is data.
  bool violated = !(report.isospectral && report.pairing_verified && report.distinct_eigenvalues &&
                    report.divisibility_split);
  if (!report.open_question_data && report.verdict.status != circ::IsoStatus::NonIsomorphic)
    violated = true;
  return {envelope("construct", std::move(inputs), circ::to_json(report)), violated ? 2 : 0};
}

Output run_verify_characterization(Int n, Int m, bool multisets, Int budget) {
  const circ::CharacterizationReport report = circ::verify_characterization(n, m, multisets, budget);
  const bool violated =
      report.criterion_holds && report.unknown_pairs.empty() && !report.counterexamples.empty();
  return {envelope("verify-characterization",
                   {{"n", n}, {"m", m}, {"multisets", multisets}, {"budget", budget}},
                   circ::to_json(report)),
          violated ? 2 : 0};
}

Output run_mine(Int n, Int m, bool multisets, Int budget) {
  const circ::CharacterizationReport report = circ::verify_characterization(n, m, multisets, budget);
  json pairs = json::array();
  for (const auto& [a, b] : report.counterexamples)
    pairs.push_back(json::array({circ::format_graph(circ::CirculantGraph(n, a)),
                                 circ::format_graph(circ::CirculantGraph(n, b))}));
  return {envelope("mine", {{"n", n}, {"m", m}, {"multisets", multisets}, {"budget", budget}},
                   json{{"count", pairs.size()}, {"pairs", std::move(pairs)}})};
}

Output run_crosscheck(const std::string& graph_text, double tolerance) {
  const circ::CirculantGraph g = circ::parse_graph(graph_text);
  return {envelope("crosscheck", {{"graph", graph_text}, {"tolerance", tolerance}},
                   circ::numeric_spectrum_crosscheck(g, tolerance))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact spectral toolkit for circulant graphs"};
  app.require_subcommand(1);

  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent the JSON output");

  std::string graph1, graph2;
  Int budget = circ::kDefaultNodeBudget;
  Int r = 0, p = 0, n = 0, m = 0;
  std::optional<Int> q;
  bool multisets = false;
  double tolerance = 1e-9;

  auto* spectrum_cmd = app.add_subcommand("spectrum", "exact spectrum of a circulant graph");
  spectrum_cmd->add_option("graph", graph1, "graph in <n>:<e1[*m1]>,... form")->required();

  auto* isospectral_cmd = app.add_subcommand("isospectral", "compare two spectra exactly");
  isospectral_cmd->add_option("graph1", graph1)->required();
  isospectral_cmd->add_option("graph2", graph2)->required();

  auto* isomorphic_cmd = app.add_subcommand("isomorphic", "decide isomorphism of two circulant graphs");
  isomorphic_cmd->add_option("graph1", graph1)->required();
  isomorphic_cmd->add_option("graph2", graph2)->required();
  isomorphic_cmd->add_option("--budget", budget, "search-node budget for brute force");

  auto* construct_cmd = app.add_subcommand("construct", "build and verify an isospectral pair on 2^r*p vertices");
  construct_cmd->add_option("--r", r, "power-of-two exponent, at least 2")->required();
  construct_cmd->add_option("--p", p, "odd prime")->required();
  Int q_raw = 0;
  auto* q_opt = construct_cmd->add_option("--q", q_raw, "extension multiplier, coprime to n");
  Int construct_budget = circ::kDefaultProbeBudget;
  construct_cmd->add_option("--budget", construct_budget, "search-node budget for brute force");

  auto* verify_cmd = app.add_subcommand("verify-characterization",
                                        "exhaustively test spectral characterization at (n, m)");
  verify_cmd->add_option("--n", n, "graph order")->required();
  verify_cmd->add_option("--m", m, "connection set size")->required();
  verify_cmd->add_flag("--multisets", multisets, "enumerate multisets instead of sets");
  verify_cmd->add_option("--budget", budget, "search-node budget per isomorphism decision");

  auto* mine_cmd = app.add_subcommand("mine", "list isospectral non-isomorphic pairs at (n, m)");
  mine_cmd->add_option("--n", n, "graph order")->required();
  mine_cmd->add_option("--m", m, "connection set size")->required();
  mine_cmd->add_flag("--multisets", multisets, "enumerate multisets instead of sets");
  mine_cmd->add_option("--budget", budget, "search-node budget per isomorphism decision");

  auto* crosscheck_cmd = app.add_subcommand("crosscheck", "compare the exact spectrum with floating point");
  crosscheck_cmd->add_option("graph", graph1)->required();
  crosscheck_cmd->add_option("--tol", tolerance, "maximum allowed deviation");

  // Lets the global --pretty flag appear after a subcommand.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    Output out{json{}, 0};
    if (*spectrum_cmd) {
      out = run_spectrum(graph1);
    } else if (*isospectral_cmd) {
      out = run_isospectral(graph1, graph2);
    } else if (*isomorphic_cmd) {
      out = run_isomorphic(graph1, graph2, budget);
    } else if (*construct_cmd) {
      if (*q_opt) q = q_raw;
      out = run_construct(r, p, q, construct_budget);
    } else if (*verify_cmd) {
      out = run_verify_characterization(n, m, multisets, budget);
    } else if (*mine_cmd) {
      out = run_mine(n, m, multisets, budget);
    } else if (*crosscheck_cmd) {
      out = run_crosscheck(graph1, tolerance);
    }
    std::cout << (pretty ? out.envelope.dump(2) : out.envelope.dump()) << "\n";
    return out.exit_code;
  } catch (const circ::parse_error& e) {
    std::cerr << "graph parse error: " << e.what() << "\n";
    return 1;
  } catch (const circ::resource_error& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 1;
  } catch (const circ::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
