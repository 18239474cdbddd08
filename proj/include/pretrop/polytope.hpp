#pragma once

// Newton polytopes from monomial supports, with the edge-skeleton data the
// search needs: vertices, facets, edges with neighbor links, and one normal
// cone per edge (facet normals tight on the edge, plus the affine hull's
// orthogonal complement as lineality when the polytope is not full
// dimensional). Supports are tiny at benchmark scale, so facets are found
// by exhaustive enumeration of spanning point subsets.

#include <utility>
#include <vector>

#include "pretrop/cone.hpp"
#include "pretrop/linalg.hpp"

namespace pretrop {

struct Support {
  int ambient_dim = 0;
  std::vector<IntVec> points;  // sorted lexicographically, duplicates removed
};

// Validates entry dimensions, sorts, and removes duplicates.
Support make_support(std::vector<IntVec> points, int ambient_dim);

struct AffineEquality {
  IntVec normal;
  Int offset;  // <x, normal> = offset on the whole polytope
};

struct Facet {
  IntVec inner_normal;        // primitive, minimized exactly on the facet
  Int support_value;          // min over vertices of <v, inner_normal>
  std::vector<int> vertex_ids;
};

struct Edge {
  int id = 0;
  int u = 0, v = 0;                // endpoint vertex ids, u < v
  std::vector<int> neighbors;      // edges sharing an endpoint, ascending
  Cone normal_cone;
};

struct Polytope {
  int ambient_dim = 0;
  int dim = 0;
  std::vector<IntVec> vertices;            // sorted lexicographically
  std::vector<AffineEquality> affine_hull;
  std::vector<Facet> facets;
  std::vector<Edge> edges;
};

struct FaceDescriptor {
  std::vector<int> vertex_ids;  // ascending
  int dim = 0;
};

// Throws Error("EmptySupport") when the support has no points.
Polytope build_polytope(const Support& s);

// Vertices attaining the minimal inner product with r, and their affine
// dimension. Throws Error("ZeroVector") for r = 0.
FaceDescriptor support_face(const Polytope& p, const IntVec& r);

// Ids of edges with at least one endpoint in the face, ascending.
std::vector<int> edges_touching_face(const Polytope& p,
                                     const FaceDescriptor& f);

}  // namespace pretrop
