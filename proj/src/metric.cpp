#include "woc/metric.hpp"

#include <algorithm>
#include <queue>

#include "woc/complex.hpp"

namespace woc {

namespace {

std::vector<int> bfs(const std::vector<std::vector<int>>& adj, int source) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int v : adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push(v);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<std::vector<int>> graph_distances(const HasseGraph& h) {
  const auto adj = h.adjacency();
  std::vector<std::vector<int>> dist;
  dist.reserve(h.vertices.size());
  for (int s = 0; s < static_cast<int>(h.vertices.size()); ++s) {
    dist.push_back(bfs(adj, s));
    for (int d : dist.back())
      if (d < 0) throw wo_error(errc::disconnected, "graph_distances: unreachable vertex");
  }
  return dist;
}

DistanceReport verify_partial_cube(const Ground& g, int cap) {
  const HasseGraph h = build_hasse(g, cap);
  const auto adj = h.adjacency();

  std::vector<CharVector> vectors;
  vectors.reserve(h.vertices.size());
  for (const WeakOrder& w : h.vertices) vectors.push_back(chi(w));

  DistanceReport report;
  const int count = static_cast<int>(h.vertices.size());
  for (int u = 0; u < count; ++u) {
    const std::vector<int> dist = bfs(adj, u);
    for (int v = u + 1; v < count; ++v) {
      ++report.pair_count;
      const int hd = hamming(vectors[u], vectors[v]);
      if (dist[v] < 0 || dist[v] != hd)
        report.mismatches.push_back({u, v, dist[v], hd});
      report.max_graph_distance = std::max(report.max_graph_distance, dist[v]);
    }
  }
  return report;
}

WellGradedReport verify_well_graded(std::span<const JSet> family) {
  const int count = static_cast<int>(family.size());
  std::vector<std::vector<int>> adj(count);
  for (int a = 0; a < count; ++a)
    for (int b = a + 1; b < count; ++b)
      if (family[a].symmetric_difference_size(family[b]) == 1) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }

  WellGradedReport report;
  report.well_graded = true;
  for (int a = 0; a < count; ++a) {
    const std::vector<int> dist = bfs(adj, a);
    for (int b = a + 1; b < count; ++b) {
      ++report.pair_count;
      if (dist[b] != family[a].symmetric_difference_size(family[b])) {
        report.well_graded = false;
        if (!report.witness) report.witness = {family[a], family[b]};
      }
    }
  }
  return report;
}

}  // namespace woc
