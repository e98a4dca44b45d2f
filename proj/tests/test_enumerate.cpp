#include <doctest.h>

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "woc/enumerate.hpp"
#include "woc/text.hpp"

#include "test_util.hpp"

using namespace woc;
using namespace woc::testutil;

TEST_CASE("weak order counts") {
  const auto fubini = fubini_numbers(8);
  const std::vector<long long> known = {1, 1, 3, 13, 75, 541, 4683, 47293, 545835};
  for (int n = 0; n <= 8; ++n) CHECK(fubini[n] == known[n]);

  for (int n = 1; n <= 6; ++n)
    CHECK(static_cast<long long>(enumerate_weak_orders(Ground(n)).size()) == fubini[n]);

  CHECK_THROWS_AS(enumerate_weak_orders(Ground(6), 5), wo_error);
}

TEST_CASE("canonical order: n=2 listing") {
  const Ground g(2);
  const auto orders = enumerate_weak_orders(g);
  REQUIRE(orders.size() == 3);
  CHECK(to_text(orders[0], g) == "a|b");
  CHECK(to_text(orders[1], g) == "b|a");
  CHECK(to_text(orders[2], g) == "ab");
}

TEST_CASE("enumeration is deterministic and canonically sorted") {
  for (int n = 2; n <= 4; ++n) {
    const auto a = enumerate_weak_orders(Ground(n));
    const auto b = enumerate_weak_orders(Ground(n));
    CHECK(a == b);
    CHECK(std::is_sorted(a.begin(), a.end(), canonical_less));
    const std::set<std::vector<Mask>> distinct = [&] {
      std::set<std::vector<Mask>> s;
      for (const WeakOrder& w : a) s.insert(w.blocks());
      return s;
    }();
    CHECK(distinct.size() == a.size());
  }
}

TEST_CASE("two-order enumeration") {
  CHECK(enumerate_two_orders(Ground(2)).size() == 2);
  CHECK(enumerate_two_orders(Ground(3)).size() == 6);
  CHECK(enumerate_two_orders(Ground(4)).size() == 14);
  // Coordinate order is ascending bottom mask.
  const auto twos = enumerate_two_orders(Ground(3));
  for (size_t i = 0; i < twos.size(); ++i) CHECK(twos[i].bottom() == i + 1);
}

TEST_CASE("enumeration by block count") {
  CHECK(enumerate_by_classes(Ground(3), 2).size() == 6);
  CHECK(enumerate_by_classes(Ground(3), 3).size() == 6);
  CHECK(enumerate_by_classes(Ground(4), 2).size() == 14);
  CHECK(enumerate_by_classes(Ground(4), 1).size() == 1);
  for (int n = 2; n <= 4; ++n) {
    CHECK(static_cast<long long>(enumerate_by_classes(Ground(n), n).size()) == factorial(n));
    size_t total = 0;
    for (int k = 1; k <= n; ++k) {
      const auto layer = enumerate_by_classes(Ground(n), k);
      total += layer.size();
      for (const WeakOrder& w : layer) CHECK(w.block_count() == k);
    }
    CHECK(total == enumerate_weak_orders(Ground(n)).size());
  }
  CHECK_THROWS_AS(enumerate_by_classes(Ground(3), 0), wo_error);
  CHECK_THROWS_AS(enumerate_by_classes(Ground(3), 4), wo_error);
}

TEST_CASE("hasse graph: small cases") {
  SUBCASE("n=2") {
    const HasseGraph h = build_hasse(Ground(2));
    REQUIRE(h.vertices.size() == 3);
    REQUIRE(h.edges.size() == 2);
    const Ground g(2);
    CHECK(to_text(h.vertices[2], g) == "ab");
    CHECK(h.edges == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});
  }
  SUBCASE("n=3 counts and trivial degree") {
    const HasseGraph h = build_hasse(Ground(3));
    CHECK(h.vertices.size() == 13);
    CHECK(h.edges.size() == 18);
    const int trivial = h.index_of(WeakOrder::trivial(3));
    REQUIRE(trivial >= 0);
    int degree = 0;
    for (const auto& [lo, hi] : h.edges)
      if (lo == trivial || hi == trivial) ++degree;
    CHECK(degree == 6);  // every two-order is covered by the trivial order
  }
}

TEST_CASE("hasse edges are exactly the cover pairs") {
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    const HasseGraph h = build_hasse(Ground(n));

    std::set<std::pair<int, int>> edge_set(h.edges.begin(), h.edges.end());
    CHECK(edge_set.size() == h.edges.size());

    // Every edge is a cover pair joining adjacent ranks.
    for (const auto& [lo, hi] : h.edges) {
      CHECK(covers(h.vertices[hi], h.vertices[lo]));
      const int rank_lo = n - h.vertices[lo].block_count();
      const int rank_hi = n - h.vertices[hi].block_count();
      CHECK(rank_hi == rank_lo + 1);
    }

    // Every cover pair (by the generic oracle) is an edge.
    size_t cover_pairs = 0;
    for (int a = 0; a < static_cast<int>(h.vertices.size()); ++a)
      for (int b = 0; b < static_cast<int>(h.vertices.size()); ++b) {
        if (a == b || !contains(h.vertices[a], h.vertices[b])) continue;
        bool strictly_between = false;
        for (const WeakOrder& mid : h.vertices)
          if (!(mid == h.vertices[a]) && !(mid == h.vertices[b]) &&
              contains(h.vertices[a], mid) && contains(mid, h.vertices[b])) {
            strictly_between = true;
            break;
          }
        if (!strictly_between) {
          ++cover_pairs;
          CHECK(edge_set.count({b, a}) == 1);
        }
      }
    CHECK(cover_pairs == h.edges.size());
  }
}

TEST_CASE("hasse graph is connected") {
  for (int n = 2; n <= 4; ++n) {
    const HasseGraph h = build_hasse(Ground(n));
    const auto adj = h.adjacency();
    std::vector<char> seen(adj.size(), 0);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = 1;
    size_t reached = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int v : adj[u])
        if (!seen[v]) {
          seen[v] = 1;
          ++reached;
          queue.push(v);
        }
    }
    CHECK(reached == adj.size());
  }
}

TEST_CASE("up_set") {
  SUBCASE("linear order on three elements") {
    const auto ups = up_set(wo(3, "a|b|c"));
    REQUIRE(ups.size() == 4);
    const std::set<std::vector<Mask>> got = [&] {
      std::set<std::vector<Mask>> s;
      for (const WeakOrder& w : ups) s.insert(w.blocks());
      return s;
    }();
    const std::set<std::vector<Mask>> expected = {
        wo(3, "abc").blocks(), wo(3, "a|bc").blocks(), wo(3, "ab|c").blocks(),
        wo(3, "a|b|c").blocks()};
    CHECK(got == expected);
  }
  SUBCASE("trivial order") {
    const auto ups = up_set(WeakOrder::trivial(3));
    REQUIRE(ups.size() == 1);
    CHECK(ups[0] == WeakOrder::trivial(3));
  }
  SUBCASE("membership matches contains") {
    for (int n = 2; n <= 4; ++n) {
      const auto orders = enumerate_weak_orders(Ground(n));
      for (const WeakOrder& w : orders) {
        const auto ups = up_set(w);
        CHECK(ups.size() == (size_t{1} << (w.block_count() - 1)));
        std::set<std::vector<Mask>> in_up;
        for (const WeakOrder& u : ups) {
          CHECK(contains(u, w));
          in_up.insert(u.blocks());
        }
        size_t containing = 0;
        for (const WeakOrder& u : orders)
          if (contains(u, w)) {
            ++containing;
            CHECK(in_up.count(u.blocks()) == 1);
          }
        CHECK(containing == ups.size());
      }
    }
  }
  SUBCASE("every up-set is a Boolean lattice keyed by kept cuts") {
    for (int n = 2; n <= 4; ++n)
      for (const WeakOrder& w : enumerate_weak_orders(Ground(n))) {
        const auto ups = up_set(w);
        for (Mask s = 0; s < ups.size(); ++s)
          for (Mask t = 0; t < ups.size(); ++t)
            CHECK(contains(ups[s], ups[t]) == ((s & ~t) == 0));
      }
  }
}

TEST_CASE("relation-filter oracle agrees with the constructive enumeration") {
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    const auto oracle = oracle_enumerate(Ground(n));
    const auto orders = enumerate_weak_orders(Ground(n));
    REQUIRE(oracle.size() == orders.size());

    std::set<Relation> oracle_set(oracle.begin(), oracle.end());
    CHECK(oracle_set.size() == oracle.size());
    for (const WeakOrder& w : orders) CHECK(oracle_set.count(to_relation(w)) == 1);
  }
  CHECK(oracle_enumerate(Ground(2)).size() == 3);
  CHECK(oracle_enumerate(Ground(3)).size() == 13);
  CHECK_THROWS_AS(oracle_enumerate(Ground(5)), wo_error);
}
