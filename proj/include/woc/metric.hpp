#pragma once

#include <optional>
#include <span>
#include <vector>

#include "woc/char_vector.hpp"
#include "woc/core.hpp"
#include "woc/enumerate.hpp"

namespace woc {

/// Unweighted all-pairs shortest paths on the undirected Hasse graph.
/// Throws disconnected if some vertex is unreachable.
std::vector<std::vector<int>> graph_distances(const HasseGraph& h);

/// Outcome of the isometry check. Verification passes iff no mismatches.
struct DistanceReport {
  long long pair_count = 0;
  int max_graph_distance = 0;

  struct Mismatch {
    int u = 0;
    int v = 0;
    int graph_distance = 0;
    int hamming_distance = 0;
  };
  std::vector<Mismatch> mismatches;

  bool passed() const { return mismatches.empty(); }
};

/// Checks that graph distance equals Hamming distance between characteristic
/// vectors over every vertex pair. Never aborts early; all mismatches are
/// collected in canonical order.
DistanceReport verify_partial_cube(const Ground& g, int cap = kDefaultCap);

/// Outcome of the wellgradedness check on a set family.
struct WellGradedReport {
  bool well_graded = false;
  long long pair_count = 0;
  /// A pair with no stepwise geodesic inside the family, when one exists.
  std::optional<std::pair<JSet, JSet>> witness;
};

/// A family is well graded when any two members are joined by a chain inside
/// the family moving one element at a time, of length equal to their
/// symmetric difference. Checked by BFS in the distance-1 graph.
WellGradedReport verify_well_graded(std::span<const JSet> family);

}  // namespace woc
