#include <doctest.h>

#include <algorithm>

#include "woc/complex.hpp"
#include "woc/metric.hpp"

#include "test_util.hpp"

using namespace woc;
using namespace woc::testutil;

TEST_CASE("graph distances") {
  SUBCASE("n=2: opposite linear orders meet through the trivial order") {
    const HasseGraph h = build_hasse(Ground(2));
    const auto dist = graph_distances(h);
    const int a = h.index_of(wo(2, "a|b"));
    const int b = h.index_of(wo(2, "b|a"));
    CHECK(dist[a][b] == 2);
    for (size_t i = 0; i < h.vertices.size(); ++i) CHECK(dist[i][i] == 0);
  }
  SUBCASE("n=3: reversal distance and diameter") {
    const HasseGraph h = build_hasse(Ground(3));
    const auto dist = graph_distances(h);
    CHECK(dist[h.index_of(wo(3, "a|b|c"))][h.index_of(wo(3, "c|b|a"))] == 4);
    int diameter = 0;
    for (const auto& row : dist) diameter = std::max(diameter, *std::max_element(row.begin(), row.end()));
    CHECK(diameter == 4);
  }
  SUBCASE("n=2 diameter") {
    const auto dist = graph_distances(build_hasse(Ground(2)));
    int diameter = 0;
    for (const auto& row : dist) diameter = std::max(diameter, *std::max_element(row.begin(), row.end()));
    CHECK(diameter == 2);
  }
}

TEST_CASE("graph_distances rejects a disconnected graph") {
  HasseGraph broken = build_hasse(Ground(2));
  broken.edges.clear();
  try {
    graph_distances(broken);
    FAIL("expected a wo_error");
  } catch (const wo_error& e) {
    CHECK(e.code() == errc::disconnected);
  }
}

TEST_CASE("hamming distance") {
  CHECK(hamming(chi(wo(3, "abc")), chi(wo(3, "a|b|c"))) == 2);
  for (int n = 2; n <= 4; ++n) {
    const auto linears = enumerate_by_classes(Ground(n), n);
    for (const WeakOrder& linear : linears)
      CHECK(hamming(chi(WeakOrder::trivial(n)), chi(linear)) == n - 1);
  }
  const CharVector u = chi(wo(3, "b|ac"));
  CHECK(hamming(u, u) == 0);
  CHECK(hamming(chi(wo(3, "a|b|c")), chi(wo(3, "c|b|a"))) == 4);  // disjoint supports
  CHECK_THROWS_AS(hamming(chi(wo(3, "abc")), chi(wo(2, "ab"))), wo_error);
}

TEST_CASE("partial cube verification") {
  SUBCASE("n=3") {
    const DistanceReport report = verify_partial_cube(Ground(3));
    CHECK(report.passed());
    CHECK(report.pair_count == 13 * 12 / 2);
    CHECK(report.max_graph_distance == 4);
  }
  SUBCASE("n=4") {
    const DistanceReport report = verify_partial_cube(Ground(4));
    CHECK(report.passed());
    CHECK(report.pair_count == 75 * 74 / 2);
  }
  SUBCASE("n=5 (slow tier)") {
    if (!slow_enabled()) return;
    const DistanceReport report = verify_partial_cube(Ground(5));
    CHECK(report.passed());
    CHECK(report.pair_count == 541 * 540 / 2);
  }
  SUBCASE("cover edges sit at Hamming distance 1") {
    for (int n = 2; n <= 4; ++n) {
      const HasseGraph h = build_hasse(Ground(n));
      for (const auto& [lo, hi] : h.edges)
        CHECK(hamming(chi(h.vertices[lo]), chi(h.vertices[hi])) == 1);
    }
  }
}

TEST_CASE("wellgradedness") {
  SUBCASE("decomposition family passes") {
    for (int n = 2; n <= 4; ++n) {
      CAPTURE(n);
      std::vector<JSet> family;
      for (const WeakOrder& w : enumerate_weak_orders(Ground(n)))
        family.push_back(two_order_decomposition(w));
      const WellGradedReport report = verify_well_graded(family);
      CHECK(report.well_graded);
      CHECK_FALSE(report.witness.has_value());
      // Cross-validation: the same family embeds isometrically.
      CHECK(verify_partial_cube(Ground(n)).passed());
    }
  }
  SUBCASE("a two-set family with a gap fails with a witness") {
    const std::vector<JSet> family = {JSet(3), JSet(3, {0b001, 0b011})};
    const WellGradedReport report = verify_well_graded(family);
    CHECK_FALSE(report.well_graded);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->first.symmetric_difference_size(report.witness->second) == 2);
  }
}
