#include <doctest.h>

#include <algorithm>
#include <set>

#include "woc/core.hpp"
#include "woc/enumerate.hpp"
#include "woc/text.hpp"

#include "test_util.hpp"

using namespace woc;
using namespace woc::testutil;

TEST_CASE("to_relation reads off the block order") {
  SUBCASE("two blocks") {
    const Relation r = to_relation(wo(3, "a|bc"));
    const std::set<std::pair<int, int>> expected = {{0, 0}, {0, 1}, {0, 2}, {1, 1},
                                                    {1, 2}, {2, 1}, {2, 2}};
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) CHECK(r.test(x, y) == expected.count({x, y}));
  }
  SUBCASE("trivial order is complete") {
    CHECK(to_relation(wo(3, "abc")).pair_count() == 9);
    CHECK(to_relation(wo(3, "abc")) == Relation::complete(3));
  }
  SUBCASE("linear order is upper triangular") {
    const Relation r = to_relation(wo(3, "a|b|c"));
    CHECK(r.pair_count() == 6);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) CHECK(r.test(x, y) == (x <= y));
  }
}

TEST_CASE("from_relation recovers the order") {
  SUBCASE("round trip") {
    const WeakOrder w = wo(3, "a|bc");
    CHECK(from_relation(to_relation(w)).value() == w);
  }
  SUBCASE("explicit six-pair linear relation") {
    Relation r(3);
    for (int x = 0; x < 3; ++x)
      for (int y = x; y < 3; ++y) r.set(x, y);
    CHECK(from_relation(r).value() == wo(3, "a|b|c"));
  }
  SUBCASE("incomparable pair is rejected") {
    Relation r = to_relation(wo(3, "a|b|c"));
    r.set(0, 1, false);  // now neither (a,b) nor (b,a)
    const auto res = from_relation(r);
    REQUIRE_FALSE(res.ok());
    CHECK(res.error() == errc::not_strongly_complete);
  }
  SUBCASE("cyclic complete relation is rejected") {
    Relation r(3);
    for (int x = 0; x < 3; ++x) r.set(x, x);
    r.set(0, 1);
    r.set(1, 2);
    r.set(2, 0);
    const auto res = from_relation(r);
    REQUIRE_FALSE(res.ok());
    CHECK(res.error() == errc::not_transitive);
  }
}

TEST_CASE("contains") {
  CHECK(contains(wo(3, "ab|c"), wo(3, "a|b|c")));
  CHECK_FALSE(contains(wo(3, "a|bc"), wo(3, "b|a|c")));
  // Relation-inclusion oracle for the negative example: (b,a) is missing.
  CHECK_FALSE(to_relation(wo(3, "b|a|c")).is_subset_of(to_relation(wo(3, "a|bc"))));

  for (const WeakOrder& w : enumerate_weak_orders(Ground(3)))
    CHECK(contains(WeakOrder::trivial(3), w));

  CHECK_THROWS_AS(contains(wo(2, "a|b"), wo(3, "a|b|c")), wo_error);
}

TEST_CASE("covers") {
  CHECK(covers(wo(3, "ab|c"), wo(3, "a|b|c")));
  CHECK_FALSE(covers(wo(3, "abc"), wo(3, "a|b|c")));  // rank gap 2
  const WeakOrder w = wo(3, "a|bc");
  CHECK_FALSE(covers(w, w));
}

TEST_CASE("join") {
  SUBCASE("idempotent") {
    for (const WeakOrder& w : enumerate_weak_orders(Ground(3))) CHECK(join(w, w) == w);
  }
  SUBCASE("opposite linear orders join to the trivial order") {
    CHECK(join(wo(3, "a|b|c"), wo(3, "c|b|a")) == wo(3, "abc"));
  }
  SUBCASE("derived example against a naive closure") {
    const WeakOrder a = wo(3, "a|b|c");
    const WeakOrder b = wo(3, "b|a|c");
    const BoolMat closed = bool_closure(bool_union(to_bool(to_relation(a)), to_bool(to_relation(b))));
    CHECK(closed == to_bool(to_relation(wo(3, "ab|c"))));
    CHECK(join(a, b) == wo(3, "ab|c"));
  }
}

TEST_CASE("two_order_decomposition lists the prefix cuts") {
  CHECK(two_order_decomposition(wo(3, "abc")).empty());
  CHECK(two_order_decomposition(wo(3, "a|b|c")).bottoms() == std::vector<Mask>{0b001, 0b011});
  CHECK(two_order_decomposition(wo(3, "a|bc")).bottoms() == std::vector<Mask>{0b001});
}

TEST_CASE("from_two_orders") {
  SUBCASE("cuts of a linear order intersect back to it") {
    // Oracle: intersect the two relations naively.
    const BoolMat meet = bool_intersection(to_bool(to_relation(TwoOrder(3, 0b001))),
                                           to_bool(to_relation(TwoOrder(3, 0b011))));
    CHECK(meet == to_bool(to_relation(wo(3, "a|b|c"))));
    CHECK(from_two_orders(JSet(3, {0b001, 0b011})).value() == wo(3, "a|b|c"));
  }
  SUBCASE("empty set gives the trivial order") {
    CHECK(from_two_orders(JSet(3)).value() == wo(3, "abc"));
  }
  SUBCASE("crossing bottoms are not a decomposition") {
    // Oracle: the intersection leaves a and b incomparable.
    const BoolMat meet = bool_intersection(to_bool(to_relation(TwoOrder(3, 0b010))),
                                           to_bool(to_relation(TwoOrder(3, 0b001))));
    CHECK_FALSE(bool_strongly_complete(meet));
    const auto res = from_two_orders(JSet(3, {0b010, 0b001}));
    REQUIRE_FALSE(res.ok());
    CHECK(res.error() == errc::not_in_family);
  }
  SUBCASE("decides family membership over every subset of the coordinates") {
    for (int n = 2; n <= 4; ++n) {
      CAPTURE(n);
      std::set<JSet> family;
      for (const WeakOrder& w : enumerate_weak_orders(Ground(n)))
        family.insert(two_order_decomposition(w));
      const int d = (1 << n) - 2;
      long long accepted = 0;
      for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << d); ++pick) {
        std::vector<Mask> bottoms;
        for (int i = 0; i < d; ++i)
          if ((pick >> i) & 1u) bottoms.push_back(static_cast<Mask>(i + 1));
        const JSet j(n, bottoms);
        const auto res = from_two_orders(j);
        CHECK(res.ok() == (family.count(j) == 1));
        if (res.ok()) {
          ++accepted;
          CHECK(two_order_decomposition(*res) == j);
        }
      }
      CHECK(accepted == static_cast<long long>(family.size()));
    }
  }
}

TEST_CASE("from_function builds level sets") {
  const long long v1[] = {1, 2, 2};
  CHECK(from_function(std::span<const long long>(v1)) == wo(3, "a|bc"));
  const long long v2[] = {5, 5, 5};
  CHECK(from_function(std::span<const long long>(v2)) == wo(3, "abc"));
  const long long v3[] = {3, 1, 2};
  CHECK(from_function(std::span<const long long>(v3)) == wo(3, "b|c|a"));

  const Rational r1[] = {{1, 2}, {1, 2}};
  CHECK(from_function(std::span<const Rational>(r1)) == wo(2, "ab"));
  const Rational r2[] = {{1, 2}, {1, 3}};
  CHECK(from_function(std::span<const Rational>(r2)) == wo(2, "b|a"));
}

TEST_CASE("canonical_function") {
  CHECK(canonical_function(wo(3, "a|bc")) == std::vector<int>{1, 2, 2});
  CHECK(canonical_function(wo(3, "abc")) == std::vector<int>{1, 1, 1});
  CHECK(canonical_function(wo(3, "a|b|c")) == std::vector<int>{1, 2, 3});
}

TEST_CASE("exhaustive properties") {
  const int max_n = slow_enabled() ? 5 : 4;
  for (int n = 2; n <= max_n; ++n) {
    CAPTURE(n);
    const auto orders = enumerate_weak_orders(Ground(n));

    for (const WeakOrder& w : orders) {
      CHECK(from_relation(to_relation(w)).value() == w);
      const JSet j = two_order_decomposition(w);
      CHECK(j.size() == w.block_count() - 1);
      CHECK(from_two_orders(j).value() == w);
      const auto f = canonical_function(w);
      std::vector<long long> scores(f.begin(), f.end());
      CHECK(from_function(std::span<const long long>(scores)) == w);
    }

    if (n > 4) continue;  // pairwise and subset scans stay at the default tier

    // Structural predicates agree with the relation oracle, and containment
    // dualizes to decomposition inclusion.
    for (const WeakOrder& a : orders) {
      const Relation ra = to_relation(a);
      const JSet ja = two_order_decomposition(a);
      for (const WeakOrder& b : orders) {
        const bool incl = to_relation(b).is_subset_of(ra);
        CHECK(contains(a, b) == incl);
        CHECK(contains(a, b) == ja.is_subset_of(two_order_decomposition(b)));

        // Generic poset cover: strict containment with nothing in between.
        bool cover_oracle = incl && !(a == b);
        if (cover_oracle)
          for (const WeakOrder& mid : orders)
            if (!(mid == a) && !(mid == b) && contains(a, mid) && contains(mid, b)) {
              cover_oracle = false;
              break;
            }
        CHECK(covers(a, b) == cover_oracle);
      }
    }

    // Downward closure: any subset of a decomposition is a decomposition.
    for (const WeakOrder& w : orders) {
      const std::vector<Mask> cuts = two_order_decomposition(w).bottoms();
      for (Mask pick = 0; pick < (Mask{1} << cuts.size()); ++pick) {
        std::vector<Mask> subset;
        for (size_t i = 0; i < cuts.size(); ++i)
          if ((pick >> i) & 1u) subset.push_back(cuts[i]);
        CHECK(from_two_orders(JSet(n, subset)).ok());
      }
    }

    // Join: commutative, associative, and the least upper bound.
    for (const WeakOrder& a : orders)
      for (const WeakOrder& b : orders) {
        const WeakOrder ab = join(a, b);
        CHECK(ab == join(b, a));
        CHECK(contains(ab, a));
        CHECK(contains(ab, b));
        for (const WeakOrder& upper : orders)
          if (contains(upper, a) && contains(upper, b)) CHECK(contains(upper, ab));
      }
    if (n <= 3) {
      for (const WeakOrder& a : orders)
        for (const WeakOrder& b : orders)
          for (const WeakOrder& c : orders)
            CHECK(join(join(a, b), c) == join(a, join(b, c)));
    }
  }
}

TEST_CASE("construction helpers") {
  const int perm[] = {0, 1, 2};
  CHECK(WeakOrder::linear(3, perm) == wo(3, "a|b|c"));
  const int swapped[] = {1, 0, 2};
  CHECK(WeakOrder::linear(3, swapped) == wo(3, "b|a|c"));
  CHECK(merge_adjacent(wo(3, "a|b|c"), 1) == wo(3, "a|bc"));
  CHECK_THROWS_AS(merge_adjacent(wo(3, "a|b|c"), 2), wo_error);
  CHECK_THROWS_AS(merge_adjacent(wo(3, "abc"), 0), wo_error);
  CHECK_THROWS_AS(from_relation(Relation(3)).value(), wo_error);  // failed result
}

TEST_CASE("ground and type validation") {
  CHECK_THROWS_AS(Ground(0), std::invalid_argument);
  CHECK_THROWS_AS(Ground(kMaxGround + 1), std::invalid_argument);
  CHECK_THROWS_AS(Ground(2, {"x", "x"}), std::invalid_argument);
  CHECK_THROWS_AS(WeakOrder(3, {0b001, 0b010}), std::invalid_argument);   // missing element
  CHECK_THROWS_AS(WeakOrder(3, {0b011, 0b110}), std::invalid_argument);   // overlap
  CHECK_THROWS_AS(WeakOrder(3, {0b111, 0}), std::invalid_argument);       // empty block
  CHECK_THROWS_AS(TwoOrder(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(TwoOrder(3, 0b111), std::invalid_argument);
  CHECK_NOTHROW(Ground(1));  // degenerate single-element ground is usable
  CHECK(enumerate_weak_orders(Ground(1)).size() == 1);
}

TEST_CASE("error codes identify the cause") {
  const auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const wo_error& e) {
      return e.code();
    }
    FAIL("expected a wo_error");
    return errc::ground_mismatch;
  };
  CHECK(code_of([] { contains(wo(2, "a|b"), wo(3, "a|b|c")); }) == errc::ground_mismatch);
  CHECK(code_of([] { join(wo(2, "ab"), wo(3, "abc")); }) == errc::ground_mismatch);
  CHECK(code_of([] { enumerate_weak_orders(Ground(6), 5); }) == errc::cap_exceeded);
  CHECK(code_of([] { enumerate_by_classes(Ground(3), 0); }) == errc::bad_k);
  CHECK(code_of([] { oracle_enumerate(Ground(5)); }) == errc::cap_exceeded);
  CHECK(from_relation(Relation(3)).error() == errc::not_strongly_complete);
  CHECK(from_two_orders(JSet(3, {0b010, 0b001})).error() == errc::not_in_family);
}

TEST_CASE("text grammar round trips") {
  const Ground g(3);
  CHECK(to_text(wo(3, "a|bc"), g) == "a|bc");
  CHECK(to_text(TwoOrder(3, 0b011), g) == "ab");
  CHECK(parse_two_order("ab", g).bottom() == 0b011);
  for (int n = 2; n <= 4; ++n) {
    const Ground ground(n);
    for (const WeakOrder& w : enumerate_weak_orders(ground))
      CHECK(parse_weak_order(to_text(w, ground), ground) == w);
  }
  CHECK_THROWS_AS(parse_weak_order("a|b", g), std::invalid_argument);    // missing c
  CHECK_THROWS_AS(parse_weak_order("a||bc", g), std::invalid_argument);  // empty block
  CHECK_THROWS_AS(parse_weak_order("a|ba|c", g), std::invalid_argument); // repeated element
  CHECK_THROWS_AS(parse_weak_order("a|bx", g), std::invalid_argument);   // unknown label
}

TEST_CASE("text grammar with custom labels") {
  const Ground g(3, {"x", "y", "zz"});
  CHECK(to_text(wo(3, "a|bc"), Ground(3)) == "a|bc");
  const WeakOrder w(3, {0b001, 0b110});
  CHECK(to_text(w, g) == "x|yzz");
  CHECK(parse_weak_order("x|yzz", g) == w);
  // Longest label wins when one label prefixes another.
  const Ground tricky(2, {"a", "ab"});
  const WeakOrder both = WeakOrder::trivial(2);
  CHECK(to_text(both, tricky) == "aab");
  CHECK(parse_weak_order("aab", tricky) == both);
}
