#include "woc/complex.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>

namespace woc {

int coordinate_index(const TwoOrder& v) { return static_cast<int>(v.bottom()) - 1; }

int embedding_dimension(int n) { return (1 << n) - 2; }

CharVector chi(const JSet& j) {
  CharVector v(embedding_dimension(j.ground_size()));
  for (Mask bottom : j.bottoms()) v.set(static_cast<int>(bottom) - 1);
  return v;
}

CharVector chi(const WeakOrder& w) { return chi(two_order_decomposition(w)); }

Cube maximal_cube(const WeakOrder& linear) {
  if (!linear.is_linear())
    throw wo_error(errc::not_linear, "maximal_cube: order has ties");
  Cube cube;
  cube.apex_low = chi(linear);
  cube.dimension = linear.ground_size() - 1;
  for (const WeakOrder& w : up_set(linear)) cube.vertex_set.push_back(chi(w));
  return cube;
}

std::vector<CubeFace> faces_of(const Cube& cube) {
  // Free coordinates of the whole cube are the support of the low apex.
  std::vector<int> support;
  for (int i = 0; i < cube.apex_low.size(); ++i)
    if (cube.apex_low.test(i)) support.push_back(i);
  const int m = static_cast<int>(support.size());

  std::vector<CubeFace> faces;
  faces.reserve(1);
  for (Mask free_bits = 0; free_bits < (Mask{1} << m); ++free_bits) {
    // Pinned coordinates may sit at 0 or 1 independently.
    std::vector<int> pinned;
    for (int i = 0; i < m; ++i)
      if (!((free_bits >> i) & 1u)) pinned.push_back(support[i]);
    const int p = static_cast<int>(pinned.size());
    for (Mask base_bits = 0; base_bits < (Mask{1} << p); ++base_bits) {
      CubeFace face{CharVector(cube.apex_low.size()), CharVector(cube.apex_low.size())};
      for (int i = 0; i < m; ++i)
        if ((free_bits >> i) & 1u) face.free.set(support[i]);
      for (int i = 0; i < p; ++i)
        if ((base_bits >> i) & 1u) face.base.set(pinned[i]);
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

CubicalComplex build_cubical_complex(const Ground& g, int cap) {
  CubicalComplex complex{g, {}, {}, {}};
  const auto orders = enumerate_weak_orders(g, cap);

  std::unordered_map<CharVector, int, CharVectorHash> index;
  index.reserve(orders.size());
  complex.vertices.reserve(orders.size());
  for (const WeakOrder& w : orders) {
    complex.vertices.push_back(chi(w));
    index.emplace(complex.vertices.back(), static_cast<int>(complex.vertices.size()) - 1);
  }

  std::set<std::pair<int, int>> edges;
  for (const WeakOrder& w : orders) {
    if (!w.is_linear()) break;  // canonical order puts linear orders first
    Cube cube = maximal_cube(w);
    // Cube edges join vertices whose cut subsets differ in one position.
    const int dim = cube.dimension;
    for (Mask s = 0; s < (Mask{1} << dim); ++s) {
      for (int c = 0; c < dim; ++c) {
        if ((s >> c) & 1u) continue;
        const int a = index.at(cube.vertex_set[s]);
        const int b = index.at(cube.vertex_set[s | (Mask{1} << c)]);
        edges.emplace(std::min(a, b), std::max(a, b));
      }
    }
    complex.maximal_cubes.push_back(std::move(cube));
  }
  complex.skeleton_edges.assign(edges.begin(), edges.end());
  return complex;
}

std::vector<CubeFace> all_faces(const CubicalComplex& complex) {
  std::set<CubeFace> distinct;
  for (const Cube& cube : complex.maximal_cubes)
    for (CubeFace& face : faces_of(cube)) distinct.insert(std::move(face));
  return {distinct.begin(), distinct.end()};
}

long long face_count_permutahedron(int n, int k, int cap) {
  if (k < 0 || k > n - 1)
    throw wo_error(errc::bad_k, "face_count_permutahedron: k = " + std::to_string(k));
  return static_cast<long long>(enumerate_by_classes(Ground(n), n - k, cap).size());
}

SimplicialComplexJ build_simplicial_J(const Ground& g, int cap) {
  SimplicialComplexJ complex{g, {}};
  for (const WeakOrder& linear : enumerate_by_classes(g, g.size(), cap))
    complex.facets.push_back(two_order_decomposition(linear));
  return complex;
}

std::vector<JSet> all_faces(const SimplicialComplexJ& complex) {
  std::set<JSet> seen(complex.facets.begin(), complex.facets.end());
  // Peel one member at a time until closure.
  std::vector<JSet> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<JSet> next;
    for (const JSet& face : frontier) {
      for (Mask bottom : face.bottoms()) {
        JSet sub = face.without(bottom);
        if (seen.insert(sub).second) next.push_back(std::move(sub));
      }
    }
    frontier = std::move(next);
  }
  std::vector<JSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const JSet& a, const JSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bottoms() < b.bottoms();
  });
  return out;
}

std::vector<Rational> barycenter(const WeakOrder& w) {
  std::vector<Rational> point(w.ground_size());
  long long before = 0;
  for (int i = 0; i < w.block_count(); ++i) {
    const long long size = std::popcount(w.block(i));
    const Rational value(2 * before + size + 1, 2);
    Mask members = w.block(i);
    while (members) {
      const int x = std::countr_zero(members);
      members &= members - 1;
      point[x] = value;
    }
    before += size;
  }
  return point;
}

PermutahedronGeometry permutahedron_geometry(const Ground& g, int cap) {
  PermutahedronGeometry geo{g, {}, {}};
  for (const WeakOrder& linear : enumerate_by_classes(g, g.size(), cap)) {
    geo.vertices.push_back({linear, barycenter(linear)});
    PermutahedronGeometry::Cell cell{linear, {}};
    for (const WeakOrder& w : up_set(linear)) cell.barycenters.push_back({w, barycenter(w)});
    geo.cells.push_back(std::move(cell));
  }
  return geo;
}

}  // namespace woc
