#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "woc/error.hpp"
#include "woc/rational.hpp"

namespace woc {

/// Elements of the ground set are indices 0..n-1; subsets are bitmasks with
/// element 0 at the lowest bit. Labels appear only at I/O boundaries.
using Mask = std::uint32_t;

/// Structural limit imposed by the Mask width and by the 2^n-2 embedding
/// dimension. Enumeration entry points enforce the much smaller default cap.
inline constexpr int kMaxGround = 16;

/// Default enumeration cap (545,835 weak orders at n = 8). Override per call
/// or with the CLI --cap flag.
inline constexpr int kDefaultCap = 8;

/// The ground set: a size and a list of distinct printable labels.
/// Default labels are a, b, c, ...
class Ground {
 public:
  explicit Ground(int n);
  Ground(int n, std::vector<std::string> labels);

  int size() const { return n_; }
  Mask full_mask() const { return (Mask{1} << n_) - 1; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int element) const { return labels_[element]; }

  friend bool operator==(const Ground& a, const Ground& b) = default;

 private:
  int n_;
  std::vector<std::string> labels_;
};

/// A weak order as an ordered partition (X_1, ..., X_k) of the ground set:
/// x is ranked no higher than y exactly when x's block comes no later than
/// y's. Blocks are bitmasks; block order is semantic, element order within a
/// block is not, so a WeakOrder is canonical as constructed.
class WeakOrder {
 public:
  /// Validates the partition: blocks nonempty, pairwise disjoint, covering.
  WeakOrder(int ground_size, std::vector<Mask> blocks);

  static WeakOrder trivial(int ground_size);
  /// Linear order from a permutation: perm[i] is the element in position i
  /// (lowest first).
  static WeakOrder linear(int ground_size, std::span<const int> perm);

  int ground_size() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Mask>& blocks() const { return blocks_; }
  Mask block(int i) const { return blocks_[i]; }

  /// 0-based index of the block containing the element.
  int block_index_of(int element) const;

  bool is_linear() const { return block_count() == n_; }
  bool is_trivial() const { return block_count() == 1; }

  friend bool operator==(const WeakOrder& a, const WeakOrder& b) = default;

 private:
  int n_;
  std::vector<Mask> blocks_;
};

/// A weak 2-order (B, G), keyed by its bottom block B; the top block is the
/// complement. One coordinate of the ambient hypercube.
class TwoOrder {
 public:
  TwoOrder(int ground_size, Mask bottom);

  int ground_size() const { return n_; }
  Mask bottom() const { return bottom_; }
  Mask top() const { return ((Mask{1} << n_) - 1) ^ bottom_; }

  WeakOrder as_weak_order() const;

  friend bool operator==(const TwoOrder& a, const TwoOrder& b) = default;

 private:
  int n_;
  Mask bottom_;
};

/// A set of weak 2-orders, stored as sorted bottom-block masks. Membership of
/// the set in the family J (= being some order's decomposition) is not
/// intrinsic; from_two_orders decides it.
class JSet {
 public:
  explicit JSet(int ground_size);
  JSet(int ground_size, std::vector<Mask> bottoms);

  int ground_size() const { return n_; }
  int size() const { return static_cast<int>(bottoms_.size()); }
  bool empty() const { return bottoms_.empty(); }

  bool contains(Mask bottom) const;
  JSet with(Mask bottom) const;
  JSet without(Mask bottom) const;

  bool is_subset_of(const JSet& other) const;
  int symmetric_difference_size(const JSet& other) const;

  const std::vector<Mask>& bottoms() const { return bottoms_; }
  std::vector<TwoOrder> members() const;

  friend bool operator==(const JSet& a, const JSet& b) = default;
  friend bool operator<(const JSet& a, const JSet& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.bottoms_ < b.bottoms_;
  }

 private:
  int n_;
  std::vector<Mask> bottoms_;  // sorted, unique
};

/// n x n boolean incidence matrix; row x holds the mask of all y with
/// (x, y) in R. Weak-order-hood is a checked property, not an invariant.
class Relation {
 public:
  explicit Relation(int n);
  Relation(int n, std::vector<Mask> rows);

  static Relation complete(int n);

  int size() const { return n_; }
  bool test(int x, int y) const { return (rows_[x] >> y) & 1u; }
  void set(int x, int y, bool value = true);
  Mask row(int x) const { return rows_[x]; }
  const std::vector<Mask>& rows() const { return rows_; }

  bool is_strongly_complete() const;
  bool is_transitive() const;

  Relation transitive_closure() const;
  Relation intersect(const Relation& other) const;
  Relation unite(const Relation& other) const;
  bool is_subset_of(const Relation& other) const;

  int pair_count() const;

  friend bool operator==(const Relation& a, const Relation& b) = default;
  friend bool operator<(const Relation& a, const Relation& b) {
    return a.rows_ < b.rows_;
  }

 private:
  int n_;
  std::vector<Mask> rows_;
};

// --- Core operations --------------------------------------------------------

/// Matrix form: (x, y) present iff x's block index <= y's block index.
Relation to_relation(const WeakOrder& w);
Relation to_relation(const TwoOrder& v);

/// Recovers the unique weak order with the given matrix. Fails with
/// not_strongly_complete or not_transitive.
result<WeakOrder> from_relation(const Relation& r);

/// Containment of weak orders as relations. Computed structurally: big's
/// blocks must be unions of consecutive blocks of small.
bool contains(const WeakOrder& big, const WeakOrder& small);

/// Cover relation of the containment order: big merges exactly one adjacent
/// block pair of small.
bool covers(const WeakOrder& big, const WeakOrder& small);

/// Blocks i and i+1 of w merged (0 <= i < k-1).
WeakOrder merge_adjacent(const WeakOrder& w, int i);

/// Least upper bound in (WO, subset): transitive closure of the union.
WeakOrder join(const WeakOrder& a, const WeakOrder& b);

/// The k-1 prefix cuts {X_1 u ... u X_i : 1 <= i < k}; the trivial order
/// decomposes to the empty set. Intersecting the cuts re-yields w.
JSet two_order_decomposition(const WeakOrder& w);

/// Intersects the members' relations (empty set gives the trivial order).
/// Succeeds exactly when the result is a weak order whose decomposition is j
/// itself; fails with not_in_family otherwise.
result<WeakOrder> from_two_orders(const JSet& j);

/// Level sets of the scores, ordered by increasing value.
WeakOrder from_function(std::span<const long long> values);
WeakOrder from_function(std::span<const Rational> values);

/// 1-based block index per element; from_function inverts it.
std::vector<int> canonical_function(const WeakOrder& w);

}  // namespace woc
