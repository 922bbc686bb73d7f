// Acceptance suite: every release criterion checked at its stated tolerance,
// one pass/fail line per criterion. Exit code is the number of failures.

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "circulant/characterization.hpp"
#include "circulant/construction.hpp"
#include "circulant/json_io.hpp"
#include "subprocess.hpp"

using namespace circ;
using nlohmann::json;

namespace {

struct Criterion {
  std::string name;
  double time_limit_seconds;
  std::function<void()> body;  // throws std::runtime_error on failure
};

void require(bool condition, const std::string& message) {
  if (!condition) throw std::runtime_error(message);
}

// Shared by criteria 2 and 3: the full parameter sweep runs once.
std::vector<ConstructionReport> sweep_reports;

void criterion_example_pair() {
  const auto run = testutil::run_command(testutil::cli_path() + " isospectral 12:1,5,11 12:1,3,9");
  require(run.exit_code == 0, "CLI exited with " + std::to_string(run.exit_code));
  require(json::parse(run.stdout_text).at("result") == true, "CLI did not report isospectral");

  // The full 12-row index pairing, exact equality with zero tolerance.
  const auto [x, y] = build_pair(ConstructionParams::validated(2, 3));
  const Spectrum sx = spectrum(x), sy = spectrum(y);
  for (Int idx = 0; idx < 12; ++idx) {
    const Int g = gcd(idx, 12);
    const bool swap = g == 2 || g == 4;
    const CyclotomicValue& expected = swap ? sy.at(idx + 6) : sy.at(idx);
    require(sx.at(idx) == expected, "pairing failed at index " + std::to_string(idx));
  }
}

void criterion_construction_sweep() {
  sweep_reports.clear();
  for (Int r : {2, 3, 4, 5}) {
    for (Int p : {3, 5, 7, 11, 13}) {
      const auto params = ConstructionParams::validated(r, p);
      if (params.n > 500) continue;
      const ConstructionReport report = full_report(params);
      const std::string point = " at r=" + std::to_string(r) + ", p=" + std::to_string(p);
      require(report.isospectral, "pair not isospectral" + point);
      require(report.pairing_verified, "index pairing failed" + point);
      require(report.distinct_eigenvalues, "repeated eigenvalue" + point);
      require(report.divisibility_split, "divisibility split failed" + point);
      require(report.verdict.status == IsoStatus::NonIsomorphic, "verdict not NonIsomorphic" + point);
      sweep_reports.push_back(report);
    }
  }
  require(sweep_reports.size() == 20, "expected 20 sweep points");
}

void criterion_distinct_eigenvalues() {
  require(!sweep_reports.empty(), "construction sweep did not run");
  for (const auto& report : sweep_reports) {
    require(report.distinct_eigenvalues,
            "repeated eigenvalue at n=" + std::to_string(report.params.n));
    require(!has_repeated_eigenvalues(report.graph_x), "graph_x repeats an eigenvalue");
    require(!has_repeated_eigenvalues(report.graph_y), "graph_y repeats an eigenvalue");
  }
}

void criterion_characterization_suite() {
  const std::vector<std::pair<Int, Int>> points{{5, 2},  {5, 3}, {5, 4}, {5, 5}, {7, 2}, {7, 3},
                                                {9, 2},  {9, 3}, {15, 2}, {25, 3}, {35, 2}};
  for (const auto& [n, m] : points) {
    const std::string point = " at n=" + std::to_string(n) + ", m=" + std::to_string(m);
    require(criterion_holds(n, m), "criterion unexpectedly fails" + point);
    const CharacterizationReport report = verify_characterization(n, m, false, 10'000'000);
    require(report.unknown_pairs.empty(), "unknown verdicts" + point);
    require(report.all_isomorphic, "isospectral non-isomorphic pair" + point);
  }
}

void criterion_counterexample_rediscovery() {
  const CharacterizationReport report = verify_characterization(12, 3, false, 10'000'000);
  const ConnectionMultiset a(12, std::vector<Int>{1, 3, 9});
  const ConnectionMultiset b(12, std::vector<Int>{1, 5, 11});
  for (const auto& pair : report.counterexamples)
    if ((pair.first == a && pair.second == b) || (pair.first == b && pair.second == a)) return;
  throw std::runtime_error("the order-12 pair is missing from the counterexample list");
}

void criterion_small_sets_characterized() {
  for (Int n = 4; n <= 16; ++n) {
    for (Int m : {1, 2}) {
      for (bool multisets : {false, true}) {
        const CharacterizationReport report = verify_characterization(n, m, multisets, 10'000'000);
        require(report.all_isomorphic, "failure at n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                                           (multisets ? " (multisets)" : " (sets)"));
      }
    }
  }
}

void criterion_kernel_regression() {
  GroupRingElement target(12);
  for (Int e : {1, 5, 9}) target.add_coeff(e, 1);
  require(is_in_kernel(target), "element is not in the kernel");

  const auto decomposition = decompose_kernel(target);
  require(decomposition.has_value(), "restated decomposition missing");
  require(decomposition->reconstruct() == target, "reconstruction mismatch");

  // Exhaust the historical form: multipliers restricted to the subgroups
  // themselves. Coefficient sums are 3*(c0+c6) + 2*(d0+d4+d8) = 3.
  const GroupRingElement sig_p1 = sigma(Subgroup(12, 2));
  const GroupRingElement sig_p2 = sigma(Subgroup(12, 3));
  const std::vector<Int> p1_exponents{0, 6}, p2_exponents{0, 4, 8};
  for (Int c0 = 0; c0 <= 1; ++c0)
    for (Int c6 = 0; c6 <= 1; ++c6)
      for (Int d0 = 0; d0 <= 1; ++d0)
        for (Int d4 = 0; d4 <= 1; ++d4)
          for (Int d8 = 0; d8 <= 1; ++d8) {
            if (3 * (c0 + c6) + 2 * (d0 + d4 + d8) != 3) continue;
            GroupRingElement candidate(12);
            if (c0) candidate = candidate + GroupRingElement::unit(12, 0) * sig_p2;
            if (c6) candidate = candidate + GroupRingElement::unit(12, 6) * sig_p2;
            if (d0) candidate = candidate + GroupRingElement::unit(12, 0) * sig_p1;
            if (d4) candidate = candidate + GroupRingElement::unit(12, 4) * sig_p1;
            if (d8) candidate = candidate + GroupRingElement::unit(12, 8) * sig_p1;
            require(!(candidate == target), "element is representable in the misstated form");
          }
}

void criterion_power_sum_identity() {
  for (Int r : {2, 3, 4})
    for (Int p : {3, 5, 7})
      require(verify_power_sum_identity(r, p, 10),
              "identity failed at r=" + std::to_string(r) + ", p=" + std::to_string(p));
}

void criterion_numeric_crosscheck() {
  std::mt19937 rng(12100);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<Int> n_dist(2, 100);
    const Int n = n_dist(rng);
    std::uniform_int_distribution<Int> m_dist(1, std::min<Int>(8, n - 1));
    std::uniform_int_distribution<Int> e_dist(1, n - 1);
    std::vector<Int> elems;
    for (Int i = 0, m = m_dist(rng); i < m; ++i) elems.push_back(e_dist(rng));
    const CirculantGraph g(n, ConnectionMultiset(n, elems));
    require(numeric_spectrum_crosscheck(g, 1e-9),
            "deviation above 1e-9 for " + format_graph(g));
  }
}

void criterion_homomorphism_suite() {
  std::mt19937 rng(20080502);
  std::uniform_int_distribution<Int> n_dist(1, 60);
  std::uniform_int_distribution<Int> c_dist(-4, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    const Int n = n_dist(rng);
    std::vector<Int> ca(n), cb(n);
    for (Int& c : ca) c = c_dist(rng);
    for (Int& c : cb) c = c_dist(rng);
    const GroupRingElement a(n, ca), b(n, cb);
    require(reduce(a + b) == reduce(a) + reduce(b), "additive homomorphism failed");
    require(reduce(a * b) == reduce(a) * reduce(b), "multiplicative homomorphism failed");
  }
}

void criterion_open_question_probe() {
  const auto run = testutil::run_command(testutil::cli_path() + " construct --r 3 --p 3 --q -1");
  require(run.exit_code == 0, "CLI exited with " + std::to_string(run.exit_code));
  const json result = json::parse(run.stdout_text).at("result");
  require(result.at("open_question_data") == true, "probe output is not flagged as data");
  const std::string status = result.at("verdict").at("status");
  // The verdict's value is recorded, never asserted; it only has to be definite.
  require(status == "Isomorphic" || status == "NonIsomorphic",
          "verdict is not definite: " + status);
  std::printf("        probe outcome at n=24, q=-1: %s\n", status.c_str());
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"order-12 golden pair and exact index pairing", 1.0, criterion_example_pair},
      {"construction sweep r=2..5, p=3..13, n<=500", 60.0, criterion_construction_sweep},
      {"no repeated eigenvalues across the sweep", 60.0, criterion_distinct_eigenvalues},
      {"characterization suite at eleven (n, m) points", 600.0, criterion_characterization_suite},
      {"counterexample rediscovery at (12, 3)", 120.0, criterion_counterexample_rediscovery},
      {"orders 4..16 with one or two connections", 120.0, criterion_small_sets_characterized},
      {"kernel regression for z + z^5 + z^9 at order 12", 1.0, criterion_kernel_regression},
      {"power-of-two sum identity", 5.0, criterion_power_sum_identity},
      {"numeric crosscheck on 100 random graphs", 10.0, criterion_numeric_crosscheck},
      {"homomorphism property suite, 1000 cases", 10.0, criterion_homomorphism_suite},
      {"open-question probe at r=3, p=3, q=-1", 300.0, criterion_open_question_probe},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& criterion = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      criterion.body();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && elapsed >= criterion.time_limit_seconds) {
      ok = false;
      detail = "time limit exceeded";
    }
    std::printf("[%s] %2zu. %s (%.2fs, limit %.0fs)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                criterion.name.c_str(), elapsed, criterion.time_limit_seconds,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
