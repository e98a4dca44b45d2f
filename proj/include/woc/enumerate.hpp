#pragma once

#include <utility>
#include <vector>

#include "woc/core.hpp"

namespace woc {

/// Canonical enumeration order: decreasing block count k (linear orders
/// first, the trivial order last), lexicographically ascending block-mask
/// sequences within each k. Stable across runs; exports and golden tests
/// rely on it.
bool canonical_less(const WeakOrder& a, const WeakOrder& b);

/// All weak orders on the ground set, in canonical order. Count is the
/// Fubini number of n.
std::vector<WeakOrder> enumerate_weak_orders(const Ground& g, int cap = kDefaultCap);

/// The 2^n - 2 weak 2-orders in coordinate order (ascending bottom mask).
std::vector<TwoOrder> enumerate_two_orders(const Ground& g, int cap = kDefaultCap);

/// Weak orders with exactly k blocks, lexicographically ascending.
std::vector<WeakOrder> enumerate_by_classes(const Ground& g, int k, int cap = kDefaultCap);

/// All weak orders containing w: one per subset of w's k-1 cut positions,
/// listed by ascending kept-cut bitmask (the trivial order first, w last).
std::vector<WeakOrder> up_set(const WeakOrder& w);

/// Vertices in canonical order plus cover edges as (covered index, cover
/// index) pairs; the covered vertex always has the smaller index.
struct HasseGraph {
  Ground ground;
  std::vector<WeakOrder> vertices;
  std::vector<std::pair<int, int>> edges;

  /// Index in the canonical order, or -1 when absent.
  int index_of(const WeakOrder& w) const;

  /// Undirected adjacency lists.
  std::vector<std::vector<int>> adjacency() const;
};

/// Builds the Hasse diagram constructively: each vertex with k blocks
/// contributes its k-1 adjacent merges as upward edges.
HasseGraph build_hasse(const Ground& g, int cap = kDefaultCap);

/// Brute-force oracle: every n x n boolean matrix that is transitive and
/// strongly complete, found by scanning all 2^(n^2) matrices. Restricted to
/// n <= 4; meant for validating the constructive enumeration.
std::vector<Relation> oracle_enumerate(const Ground& g);

}  // namespace woc
