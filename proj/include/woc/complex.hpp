#pragma once

#include <utility>
#include <vector>

#include "woc/char_vector.hpp"
#include "woc/core.hpp"
#include "woc/enumerate.hpp"
#include "woc/rational.hpp"

namespace woc {

/// Hypercube coordinate of a two-order: rank of its bottom mask among the
/// masks 1 .. 2^n-2 in ascending numeric order.
int coordinate_index(const TwoOrder& v);

/// Width of the embedding, 2^n - 2.
int embedding_dimension(int n);

/// Characteristic vector of the two-order decomposition: bit set per cut.
/// Injective on weak orders; weight is the block count minus one.
CharVector chi(const WeakOrder& w);
CharVector chi(const JSet& j);

/// The (n-1)-cube spanned by the characteristic vectors of everything
/// containing a fixed linear order.
struct Cube {
  CharVector apex_low;                  // chi of the linear order itself
  std::vector<CharVector> vertex_set;   // 2^(n-1) vertices, up_set order
  int dimension = 0;
};

/// Requires a linear order; throws not_linear otherwise.
Cube maximal_cube(const WeakOrder& linear);

/// A face of a cube: coordinates in `free` vary, the rest are pinned to
/// `base` (base and free are disjoint). Dimension is the free count.
struct CubeFace {
  CharVector base;
  CharVector free;

  int dimension() const { return free.count(); }
  friend bool operator==(const CubeFace& a, const CubeFace& b) = default;
  friend bool operator<(const CubeFace& a, const CubeFace& b) {
    if (!(a.base == b.base)) return a.base < b.base;
    return a.free < b.free;
  }
};

/// All 3^dim faces of one maximal cube (generated on demand; the complex
/// never stores them).
std::vector<CubeFace> faces_of(const Cube& cube);

/// The cubical complex on the hypercube: one maximal cube per linear order,
/// vertices shared, 1-skeleton edges deduplicated.
struct CubicalComplex {
  Ground ground;
  std::vector<CharVector> vertices;            // canonical enumeration order
  std::vector<Cube> maximal_cubes;             // one per linear order, canonical order
  std::vector<std::pair<int, int>> skeleton_edges;  // vertex-index pairs, i < j
};

CubicalComplex build_cubical_complex(const Ground& g, int cap = kDefaultCap);

/// Distinct faces across all maximal cubes.
std::vector<CubeFace> all_faces(const CubicalComplex& complex);

/// Number of k-dimensional faces of the permutahedron on n elements: the
/// count of weak orders with n-k blocks.
long long face_count_permutahedron(int n, int k, int cap = kDefaultCap);

/// The polar simplicial complex: facets are the decompositions of the linear
/// orders; every face arises by downward closure.
struct SimplicialComplexJ {
  Ground ground;
  std::vector<JSet> facets;
};

SimplicialComplexJ build_simplicial_J(const Ground& g, int cap = kDefaultCap);

/// Downward closure of the facets, including the empty face, in ascending
/// (size, lexicographic) order.
std::vector<JSet> all_faces(const SimplicialComplexJ& complex);

/// Barycenter of a weak order's permutahedron face: the element ranks
/// averaged within each block, so an element of X_i gets
/// |X_1| + ... + |X_{i-1}| + (|X_i| + 1) / 2. Denominators are 1 or 2.
std::vector<Rational> barycenter(const WeakOrder& w);

/// Vertex coordinates and the cubical subdivision cells of the
/// permutahedron: one cell per linear order, holding the barycenters of all
/// faces containing that vertex.
struct PermutahedronGeometry {
  struct Vertex {
    WeakOrder order;                // a linear order
    std::vector<Rational> point;    // a permutation of 1..n
  };
  struct CellPoint {
    WeakOrder order;
    std::vector<Rational> point;
  };
  struct Cell {
    WeakOrder linear;
    std::vector<CellPoint> barycenters;  // 2^(n-1) points, up_set order
  };

  Ground ground;
  std::vector<Vertex> vertices;
  std::vector<Cell> cells;
};

PermutahedronGeometry permutahedron_geometry(const Ground& g, int cap = kDefaultCap);

}  // namespace woc
