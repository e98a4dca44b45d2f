#include "woc/core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace woc {

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return labels;
}

}  // namespace

Ground::Ground(int n) : Ground(n, default_labels(n)) {}

Ground::Ground(int n, std::vector<std::string> labels) : n_(n), labels_(std::move(labels)) {
  if (n_ < 1 || n_ > kMaxGround)
    throw std::invalid_argument("Ground: size must be in [1, " + std::to_string(kMaxGround) + "]");
  if (static_cast<int>(labels_.size()) != n_)
    throw std::invalid_argument("Ground: need exactly one label per element");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw std::invalid_argument("Ground: empty label");
    if (!seen.insert(l).second) throw std::invalid_argument("Ground: duplicate label " + l);
  }
}

WeakOrder::WeakOrder(int ground_size, std::vector<Mask> blocks)
    : n_(ground_size), blocks_(std::move(blocks)) {
  if (n_ < 1 || n_ > kMaxGround) throw std::invalid_argument("WeakOrder: bad ground size");
  const Mask full = (Mask{1} << n_) - 1;
  Mask seen = 0;
  for (Mask b : blocks_) {
    if (b == 0) throw std::invalid_argument("WeakOrder: empty block");
    if (b & ~full) throw std::invalid_argument("WeakOrder: block outside ground set");
    if (b & seen) throw std::invalid_argument("WeakOrder: blocks overlap");
    seen |= b;
  }
  if (seen != full) throw std::invalid_argument("WeakOrder: blocks do not cover the ground set");
}

WeakOrder WeakOrder::trivial(int ground_size) {
  return WeakOrder(ground_size, {(Mask{1} << ground_size) - 1});
}

WeakOrder WeakOrder::linear(int ground_size, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != ground_size)
    throw std::invalid_argument("WeakOrder::linear: permutation length mismatch");
  std::vector<Mask> blocks;
  blocks.reserve(ground_size);
  for (int e : perm) blocks.push_back(Mask{1} << e);
  return WeakOrder(ground_size, std::move(blocks));
}

int WeakOrder::block_index_of(int element) const {
  const Mask bit = Mask{1} << element;
  for (int i = 0; i < block_count(); ++i)
    if (blocks_[i] & bit) return i;
  throw std::invalid_argument("WeakOrder: element outside ground set");
}

TwoOrder::TwoOrder(int ground_size, Mask bottom) : n_(ground_size), bottom_(bottom) {
  if (n_ < 2 || n_ > kMaxGround) throw std::invalid_argument("TwoOrder: bad ground size");
  const Mask full = (Mask{1} << n_) - 1;
  if (bottom_ == 0 || bottom_ == full || (bottom_ & ~full))
    throw std::invalid_argument("TwoOrder: bottom block must be nonempty and proper");
}

WeakOrder TwoOrder::as_weak_order() const { return WeakOrder(n_, {bottom_, top()}); }

JSet::JSet(int ground_size) : n_(ground_size) {
  if (n_ < 1 || n_ > kMaxGround) throw std::invalid_argument("JSet: bad ground size");
}

JSet::JSet(int ground_size, std::vector<Mask> bottoms) : JSet(ground_size) {
  for (Mask b : bottoms) TwoOrder(n_, b);  // validate
  std::sort(bottoms.begin(), bottoms.end());
  bottoms.erase(std::unique(bottoms.begin(), bottoms.end()), bottoms.end());
  bottoms_ = std::move(bottoms);
}

bool JSet::contains(Mask bottom) const {
  return std::binary_search(bottoms_.begin(), bottoms_.end(), bottom);
}

JSet JSet::with(Mask bottom) const {
  TwoOrder(n_, bottom);  // validate
  if (contains(bottom)) return *this;
  JSet out(n_);
  out.bottoms_ = bottoms_;
  out.bottoms_.insert(std::lower_bound(out.bottoms_.begin(), out.bottoms_.end(), bottom), bottom);
  return out;
}

JSet JSet::without(Mask bottom) const {
  JSet out(n_);
  out.bottoms_ = bottoms_;
  auto it = std::lower_bound(out.bottoms_.begin(), out.bottoms_.end(), bottom);
  if (it != out.bottoms_.end() && *it == bottom) out.bottoms_.erase(it);
  return out;
}

bool JSet::is_subset_of(const JSet& other) const {
  return std::includes(other.bottoms_.begin(), other.bottoms_.end(), bottoms_.begin(),
                       bottoms_.end());
}

int JSet::symmetric_difference_size(const JSet& other) const {
  int common = 0;
  auto a = bottoms_.begin();
  auto b = other.bottoms_.begin();
  while (a != bottoms_.end() && b != other.bottoms_.end()) {
    if (*a == *b) {
      ++common;
      ++a;
      ++b;
    } else if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return size() + other.size() - 2 * common;
}

std::vector<TwoOrder> JSet::members() const {
  std::vector<TwoOrder> out;
  out.reserve(bottoms_.size());
  for (Mask b : bottoms_) out.emplace_back(n_, b);
  return out;
}

Relation::Relation(int n) : n_(n), rows_(n, 0) {
  if (n_ < 1 || n_ > kMaxGround) throw std::invalid_argument("Relation: bad size");
}

Relation::Relation(int n, std::vector<Mask> rows) : n_(n), rows_(std::move(rows)) {
  if (n_ < 1 || n_ > kMaxGround) throw std::invalid_argument("Relation: bad size");
  if (static_cast<int>(rows_.size()) != n_)
    throw std::invalid_argument("Relation: row count mismatch");
  const Mask full = (Mask{1} << n_) - 1;
  for (Mask r : rows_)
    if (r & ~full) throw std::invalid_argument("Relation: row outside ground set");
}

Relation Relation::complete(int n) {
  Relation r(n);
  const Mask full = (Mask{1} << n) - 1;
  for (int x = 0; x < n; ++x) r.rows_[x] = full;
  return r;
}

void Relation::set(int x, int y, bool value) {
  if (value)
    rows_[x] |= Mask{1} << y;
  else
    rows_[x] &= ~(Mask{1} << y);
}

bool Relation::is_strongly_complete() const {
  for (int x = 0; x < n_; ++x)
    for (int y = x; y < n_; ++y)
      if (!test(x, y) && !test(y, x)) return false;
  return true;
}

bool Relation::is_transitive() const {
  for (int x = 0; x < n_; ++x) {
    Mask mids = rows_[x];
    while (mids) {
      const int y = std::countr_zero(mids);
      mids &= mids - 1;
      if (rows_[y] & ~rows_[x]) return false;
    }
  }
  return true;
}

Relation Relation::transitive_closure() const {
  Relation out = *this;
  for (int via = 0; via < n_; ++via)
    for (int x = 0; x < n_; ++x)
      if (out.test(x, via)) out.rows_[x] |= out.rows_[via];
  return out;
}

Relation Relation::intersect(const Relation& other) const {
  if (n_ != other.n_) throw wo_error(errc::ground_mismatch, "Relation::intersect");
  Relation out(n_);
  for (int x = 0; x < n_; ++x) out.rows_[x] = rows_[x] & other.rows_[x];
  return out;
}

Relation Relation::unite(const Relation& other) const {
  if (n_ != other.n_) throw wo_error(errc::ground_mismatch, "Relation::unite");
  Relation out(n_);
  for (int x = 0; x < n_; ++x) out.rows_[x] = rows_[x] | other.rows_[x];
  return out;
}

bool Relation::is_subset_of(const Relation& other) const {
  if (n_ != other.n_) throw wo_error(errc::ground_mismatch, "Relation::is_subset_of");
  for (int x = 0; x < n_; ++x)
    if (rows_[x] & ~other.rows_[x]) return false;
  return true;
}

int Relation::pair_count() const {
  int total = 0;
  for (Mask r : rows_) total += std::popcount(r);
  return total;
}

Relation to_relation(const WeakOrder& w) {
  const int n = w.ground_size();
  // Row of x is the union of x's block and everything after it.
  std::vector<Mask> rows(n, 0);
  Mask suffix = 0;
  for (int i = w.block_count() - 1; i >= 0; --i) {
    suffix |= w.block(i);
    Mask members = w.block(i);
    while (members) {
      const int x = std::countr_zero(members);
      members &= members - 1;
      rows[x] = suffix;
    }
  }
  return Relation(n, std::move(rows));
}

Relation to_relation(const TwoOrder& v) { return to_relation(v.as_weak_order()); }

result<WeakOrder> from_relation(const Relation& r) {
  if (!r.is_strongly_complete())
    return result<WeakOrder>::failure(errc::not_strongly_complete,
                                      "relation is not strongly complete");
  if (!r.is_transitive())
    return result<WeakOrder>::failure(errc::not_transitive, "relation is not transitive");
  // In a weak order two elements share a block iff they have identical rows,
  // and earlier blocks have strictly larger rows (more elements above).
  const int n = r.size();
  std::vector<std::pair<Mask, int>> keyed;  // (row, element)
  keyed.reserve(n);
  for (int x = 0; x < n; ++x) keyed.emplace_back(r.row(x), x);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    const int pa = std::popcount(a.first), pb = std::popcount(b.first);
    if (pa != pb) return pa > pb;
    return a.second < b.second;
  });
  std::vector<Mask> blocks;
  for (int i = 0; i < n;) {
    Mask block = 0;
    const Mask row = keyed[i].first;
    while (i < n && keyed[i].first == row) {
      block |= Mask{1} << keyed[i].second;
      ++i;
    }
    blocks.push_back(block);
  }
  return result<WeakOrder>::success(WeakOrder(n, std::move(blocks)));
}

namespace {

void require_same_ground(const WeakOrder& a, const WeakOrder& b, const char* op) {
  if (a.ground_size() != b.ground_size()) throw wo_error(errc::ground_mismatch, op);
}

}  // namespace

bool contains(const WeakOrder& big, const WeakOrder& small) {
  require_same_ground(big, small, "contains");
  int i = 0;  // next unconsumed block of small
  for (int j = 0; j < big.block_count(); ++j) {
    Mask acc = 0;
    while (acc != big.block(j)) {
      if (i >= small.block_count()) return false;
      acc |= small.block(i++);
      if (acc & ~big.block(j)) return false;
    }
  }
  return i == small.block_count();
}

bool covers(const WeakOrder& big, const WeakOrder& small) {
  require_same_ground(big, small, "covers");
  const int k = small.block_count();
  if (big.block_count() != k - 1) return false;
  // Find the first position where the block sequences diverge; big must merge
  // exactly that adjacent pair and copy the rest.
  int i = 0;
  while (i < big.block_count() && big.block(i) == small.block(i)) ++i;
  if (i == big.block_count()) return false;
  if (big.block(i) != (small.block(i) | small.block(i + 1))) return false;
  for (int j = i + 1; j < big.block_count(); ++j)
    if (big.block(j) != small.block(j + 1)) return false;
  return true;
}

WeakOrder merge_adjacent(const WeakOrder& w, int i) {
  if (i < 0 || i + 1 >= w.block_count())
    throw wo_error(errc::bad_k, "merge_adjacent: no adjacent pair at index " + std::to_string(i));
  std::vector<Mask> blocks;
  blocks.reserve(w.block_count() - 1);
  for (int j = 0; j < w.block_count(); ++j) {
    if (j == i) {
      blocks.push_back(w.block(i) | w.block(i + 1));
      ++j;
    } else {
      blocks.push_back(w.block(j));
    }
  }
  return WeakOrder(w.ground_size(), std::move(blocks));
}

WeakOrder join(const WeakOrder& a, const WeakOrder& b) {
  require_same_ground(a, b, "join");
  const Relation closed = to_relation(a).unite(to_relation(b)).transitive_closure();
  // The closure of a union of weak orders is strongly complete and transitive.
  return from_relation(closed).value();
}

JSet two_order_decomposition(const WeakOrder& w) {
  Mask prefix = 0;
  std::vector<Mask> cuts;
  cuts.reserve(w.block_count() - 1);
  for (int i = 0; i + 1 < w.block_count(); ++i) {
    prefix |= w.block(i);
    cuts.push_back(prefix);
  }
  return JSet(w.ground_size(), std::move(cuts));
}

result<WeakOrder> from_two_orders(const JSet& j) {
  const int n = j.ground_size();
  Relation meet = Relation::complete(n);
  for (Mask bottom : j.bottoms()) meet = meet.intersect(to_relation(TwoOrder(n, bottom)));
  auto order = from_relation(meet);
  if (!order.ok())
    return result<WeakOrder>::failure(errc::not_in_family,
                                      "intersection is not a weak order: " + order.message());
  if (!(two_order_decomposition(*order) == j))
    return result<WeakOrder>::failure(errc::not_in_family,
                                      "set is not the decomposition of its intersection");
  return order;
}

WeakOrder from_function(std::span<const Rational> values) {
  const int n = static_cast<int>(values.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (values[a] == values[b]) return a < b;
    return values[a] < values[b];
  });
  std::vector<Mask> blocks;
  for (int i = 0; i < n;) {
    Mask block = 0;
    const Rational& v = values[idx[i]];
    while (i < n && values[idx[i]] == v) block |= Mask{1} << idx[i++];
    blocks.push_back(block);
  }
  return WeakOrder(n, std::move(blocks));
}

WeakOrder from_function(std::span<const long long> values) {
  std::vector<Rational> rs(values.begin(), values.end());
  return from_function(std::span<const Rational>(rs));
}

std::vector<int> canonical_function(const WeakOrder& w) {
  std::vector<int> f(w.ground_size(), 0);
  for (int i = 0; i < w.block_count(); ++i) {
    Mask members = w.block(i);
    while (members) {
      const int x = std::countr_zero(members);
      members &= members - 1;
      f[x] = i + 1;
    }
  }
  return f;
}

}  // namespace woc
