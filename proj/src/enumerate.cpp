#include "woc/enumerate.hpp"

#include <algorithm>
#include <bit>

namespace woc {

namespace {

void check_cap(const Ground& g, int cap, const char* op) {
  if (g.size() > cap)
    throw wo_error(errc::cap_exceeded, std::string(op) + ": n = " + std::to_string(g.size()) +
                                           " exceeds cap " + std::to_string(cap));
}

// Ordered partitions of `remaining` into exactly `parts` nonempty blocks,
// first block enumerated in ascending mask order so the overall sequence is
// lexicographic.
void partitions_into(int n, Mask remaining, int parts, std::vector<Mask>& prefix,
                     std::vector<WeakOrder>& out) {
  if (parts == 1) {
    prefix.push_back(remaining);
    out.emplace_back(n, prefix);
    prefix.pop_back();
    return;
  }
  const int available = std::popcount(remaining);
  Mask sub = 0;
  while (true) {
    sub = (sub - remaining) & remaining;  // next submask, ascending
    if (sub == 0) break;
    if (sub == remaining) continue;                          // later blocks need elements
    if (available - std::popcount(sub) < parts - 1) continue;  // not enough left
    prefix.push_back(sub);
    partitions_into(n, remaining ^ sub, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

bool canonical_less(const WeakOrder& a, const WeakOrder& b) {
  if (a.block_count() != b.block_count()) return a.block_count() > b.block_count();
  return a.blocks() < b.blocks();
}

std::vector<WeakOrder> enumerate_by_classes(const Ground& g, int k, int cap) {
  check_cap(g, cap, "enumerate_by_classes");
  if (k < 1 || k > g.size())
    throw wo_error(errc::bad_k, "enumerate_by_classes: k = " + std::to_string(k));
  std::vector<WeakOrder> out;
  std::vector<Mask> prefix;
  partitions_into(g.size(), g.full_mask(), k, prefix, out);
  return out;
}

std::vector<WeakOrder> enumerate_weak_orders(const Ground& g, int cap) {
  check_cap(g, cap, "enumerate_weak_orders");
  std::vector<WeakOrder> out;
  for (int k = g.size(); k >= 1; --k) {
    auto layer = enumerate_by_classes(g, k, cap);
    out.insert(out.end(), std::make_move_iterator(layer.begin()),
               std::make_move_iterator(layer.end()));
  }
  return out;
}

std::vector<TwoOrder> enumerate_two_orders(const Ground& g, int cap) {
  check_cap(g, cap, "enumerate_two_orders");
  std::vector<TwoOrder> out;
  if (g.size() < 2) return out;
  out.reserve((size_t{1} << g.size()) - 2);
  for (Mask bottom = 1; bottom < g.full_mask(); ++bottom) out.emplace_back(g.size(), bottom);
  return out;
}

std::vector<WeakOrder> up_set(const WeakOrder& w) {
  const int cuts = w.block_count() - 1;
  std::vector<WeakOrder> out;
  out.reserve(size_t{1} << cuts);
  for (Mask keep = 0; keep < (Mask{1} << cuts); ++keep) {
    std::vector<Mask> blocks;
    Mask acc = 0;
    for (int i = 0; i < w.block_count(); ++i) {
      acc |= w.block(i);
      const bool close = i == w.block_count() - 1 || ((keep >> i) & 1u);
      if (close) {
        blocks.push_back(acc);
        acc = 0;
      }
    }
    out.emplace_back(w.ground_size(), std::move(blocks));
  }
  return out;
}

int HasseGraph::index_of(const WeakOrder& w) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), w, canonical_less);
  if (it == vertices.end() || !(*it == w)) return -1;
  return static_cast<int>(it - vertices.begin());
}

std::vector<std::vector<int>> HasseGraph::adjacency() const {
  std::vector<std::vector<int>> adj(vertices.size());
  for (const auto& [lo, hi] : edges) {
    adj[lo].push_back(hi);
    adj[hi].push_back(lo);
  }
  return adj;
}

HasseGraph build_hasse(const Ground& g, int cap) {
  HasseGraph h{g, enumerate_weak_orders(g, cap), {}};
  for (int i = 0; i < static_cast<int>(h.vertices.size()); ++i) {
    const WeakOrder& w = h.vertices[i];
    for (int cut = 0; cut + 1 < w.block_count(); ++cut) {
      const int upper = h.index_of(merge_adjacent(w, cut));
      h.edges.emplace_back(i, upper);
    }
  }
  std::sort(h.edges.begin(), h.edges.end());
  h.edges.erase(std::unique(h.edges.begin(), h.edges.end()), h.edges.end());
  return h;
}

std::vector<Relation> oracle_enumerate(const Ground& g) {
  const int n = g.size();
  if (n > 4) throw wo_error(errc::cap_exceeded, "oracle_enumerate: needs n <= 4");
  std::vector<Relation> out;
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Relation r(n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if ((bits >> (x * n + y)) & 1u) r.set(x, y);
    if (r.is_strongly_complete() && r.is_transitive()) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace woc
