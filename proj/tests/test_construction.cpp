#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "circulant/construction.hpp"

using namespace circ;

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(ConstructionParams::validated(1, 3), usage_error);
  CHECK_THROWS_AS(ConstructionParams::validated(2, 2), usage_error);
  CHECK_THROWS_AS(ConstructionParams::validated(2, 9), usage_error);
  CHECK_THROWS_AS(ConstructionParams::validated(2, 3, 3), usage_error);   // gcd(3, 12) > 1
  CHECK_THROWS_AS(ConstructionParams::validated(2, 3, 1), usage_error);   // q = 1 mod n
  CHECK_THROWS_AS(ConstructionParams::validated(2, 3, 13), usage_error);  // 13 = 1 mod 12

  const auto p = ConstructionParams::validated(3, 3, -1);
  CHECK(p.n == 24);
  CHECK(p.q == Int(23));
}

TEST_CASE("base pairs") {
  const auto [x12, y12] = build_pair(ConstructionParams::validated(2, 3));
  CHECK(format_graph(x12) == "12:1,5,11");
  CHECK(format_graph(y12) == "12:1,3,9");

  const auto [x24, y24] = build_pair(ConstructionParams::validated(3, 3));
  CHECK(x24.connections().elements() == std::vector<Int>{1, 9, 21});
  CHECK(y24.connections().elements() == std::vector<Int>{1, 5, 17});

  const auto [x20, y20] = build_pair(ConstructionParams::validated(2, 5));
  CHECK(x20.degree() == 5);
  CHECK(y20.degree() == 5);
}

TEST_CASE("extended pairs") {
  // r > 2 with q = -1 gives simple undirected graphs.
  const auto [x24, y24] = extend_pair(ConstructionParams::validated(3, 3, -1));
  CHECK(x24.degree() == 6);
  CHECK(x24.connections().is_simple());
  CHECK(x24.connections().is_undirected());
  CHECK(y24.connections().is_simple());
  CHECK(y24.connections().is_undirected());

  // r = 2 with q = -1 collides: multigraphs appear.
  const auto [x12, y12] = extend_pair(ConstructionParams::validated(2, 3, -1));
  CHECK(x12.degree() == 6);
  CHECK_FALSE(x12.connections().is_simple());

  CHECK_THROWS_AS(extend_pair(ConstructionParams::validated(2, 3)), usage_error);
}

TEST_CASE("index pairing across the two spectra") {
  const auto [x, y] = build_pair(ConstructionParams::validated(2, 3));
  const Spectrum sx = spectrum(x), sy = spectrum(y);
  CHECK(sx.at(2) == sy.at(8));    // gcd(2, 12) = 2
  CHECK(sx.at(1) == sy.at(1));    // coprime index
  CHECK(sx.at(3) == sy.at(3));    // index divisible by p
  CHECK(sx.at(4) == sy.at(10));   // gcd(4, 12) = 4
  CHECK(verify_pairing(x, y));
}

TEST_CASE("power-of-two sum identity") {
  CHECK(verify_power_sum_identity(2, 3, 5));
  CHECK(verify_power_sum_identity(2, 3, 0));
  CHECK(verify_power_sum_identity(3, 7, 8));
  CHECK_THROWS_AS(verify_power_sum_identity(2, 3, -1), usage_error);
}

TEST_CASE("divisibility split of the connection sets") {
  const auto [x12, y12] = build_pair(ConstructionParams::validated(2, 3));
  CHECK(verify_divisibility_split(x12, y12, 3));

  const auto [x24, y24] = build_pair(ConstructionParams::validated(3, 3));
  CHECK(verify_divisibility_split(x24, y24, 3));

  // Tampering with either set must fail the check.
  const CirculantGraph tampered = parse_graph("12:1,5,7");
  CHECK_FALSE(verify_divisibility_split(tampered, y12, 3));
}

TEST_CASE("full reports on base pairs") {
  const ConstructionReport r12 = full_report(ConstructionParams::validated(2, 3));
  CHECK(r12.isospectral);
  CHECK(r12.pairing_verified);
  CHECK(r12.distinct_eigenvalues);
  CHECK(r12.divisibility_split);
  CHECK(r12.verdict.status == IsoStatus::NonIsomorphic);
  CHECK_FALSE(r12.open_question_data);

  const ConstructionReport r80 = full_report(ConstructionParams::validated(4, 5));
  CHECK(r80.isospectral);
  CHECK(r80.pairing_verified);
  CHECK(r80.distinct_eigenvalues);
  CHECK(r80.divisibility_split);
  CHECK(r80.verdict.status == IsoStatus::NonIsomorphic);
}

TEST_CASE("base-pair sweep certifies through the distinct-eigenvalue gate") {
  for (Int r : {2, 3, 4, 5}) {
    for (Int p : {3, 5, 7, 11, 13}) {
      if ((Int(1) << r) * p > 500) continue;
      const ConstructionReport report = full_report(ConstructionParams::validated(r, p));
      CAPTURE(r);
      CAPTURE(p);
      CHECK(report.isospectral);
      CHECK(report.pairing_verified);
      CHECK(report.distinct_eigenvalues);
      CHECK(report.divisibility_split);
      CHECK(report.verdict.status == IsoStatus::NonIsomorphic);
      CHECK(report.verdict.reason == IsoReason::AdamExhaustedUnderElspasTurner);

      CHECK(report.graph_x.degree() == p);
      CHECK(report.graph_y.degree() == p);
    }
  }
}

TEST_CASE("extensions stay isospectral") {
  for (Int r : {2, 3, 4, 5}) {
    for (Int p : {3, 5, 7, 11, 13}) {
      const Int n = (Int(1) << r) * p;
      if (n > 500) continue;
      // Smallest unit above 1 that is not 1 mod n.
      Int unit = 2;
      while (gcd(unit, n) != 1) ++unit;
      for (Int q : {Int(-1), unit}) {
        const auto [ex, ey] = extend_pair(ConstructionParams::validated(r, p, q));
        CAPTURE(r);
        CAPTURE(p);
        CAPTURE(q);
        CHECK(ex.degree() == 2 * p);
        CHECK(ey.degree() == 2 * p);
        CHECK(isospectral(ex, ey));
      }
    }
  }
}

TEST_CASE("extension report keeps base-pair theorems and flags the probe") {
  const ConstructionReport report = full_report(ConstructionParams::validated(2, 3, -1), 1'000'000);
  CHECK(report.open_question_data);
  CHECK(report.isospectral);
  CHECK(report.pairing_verified);        // checked on the base pair
  CHECK(report.distinct_eigenvalues);    // checked on the base pair
  CHECK(report.divisibility_split);      // checked on the base pair
  CHECK(report.graph_x.degree() == 6);
  CHECK(report.verdict.status == IsoStatus::NonIsomorphic);  // order 12 passes the square-free gate
}
